#include "menger/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <sstream>

#include "menger/errors.hpp"
#include "menger/io.hpp"
#include "menger/kernel.hpp"
#include "menger/order.hpp"
#include "menger/pfunc.hpp"
#include "menger/reprs.hpp"
#include "menger/terms.hpp"

namespace menger::cli {

  namespace {

    void print_report(std::ostream& out, std::string const& name, CheckReport const& r) {
      out << name << ": " << (r.holds ? "holds" : "VIOLATED") << " (" << r.checked_count << " instantiations)\n";
      for (auto const& w : r.witnesses) {
        out << "  " << w << "\n";
      }
    }

    int cmd_check(std::string const& path, std::string const& axioms, std::size_t max_witnesses, std::ostream& out) {
      auto const doc = io::parse_algebra(io::read_file(path));
      auto const& s  = doc.algebra;
      CheckOptions opts{max_witnesses};
      bool const   all = axioms == "all";
      bool         ok  = true;
      auto run = [&](char const* name, CheckReport const& r) {
        print_report(out, name, r);
        ok = ok && r.holds;
      };
      if (all || axioms == "menger") {
        run("menger", check_superassociativity(s.menger(), opts));
      }
      if (all || axioms == "subtraction") {
        run("subtraction", check_subtraction_axioms(s, opts));
      }
      if (all || axioms == "compat" || axioms == "derived") {
        auto const t = translations(s.menger());
        if (all || axioms == "compat") {
          run("compat", check_compat_axioms(s, t, opts));
        }
        if (all || axioms == "derived") {
          run("derived", check_derived_identities(s, t, opts));
        }
      }
      out << "witness tuples list element indices in carrier order\n";
      return ok ? kOk : kViolation;
    }

    int cmd_represent(std::string const& path, std::string const& out_path, std::string const& tie, std::ostream& out) {
      auto const doc = io::parse_algebra(io::read_file(path));
      auto const v   = VerifiedAlgebra::verify(doc.algebra);
      auto const r   = theorem2_pipeline(v, tie == "greatest" ? TieBreak::greatest : TieBreak::least);
      out << "separable pairs: " << r.provenance().size() << "\n";
      out << "base size: " << r.base().size() << "\n";
      out << "verified: " << (r.verified() ? "yes" : "no") << "\n";
      if (!out_path.empty()) {
        io::write_file(out_path, io::dump_representation(io::to_doc(r, doc.labels)));
      }
      return r.verified() ? kOk : kViolation;
    }

    struct PfuncArgs {
      std::string              mode;
      std::size_t              base_size = 2;
      std::size_t              rank      = 1;
      std::string              generators;
      std::uint64_t            seed  = 0;
      std::size_t              cap   = kDefaultFunctionCap;
      std::size_t              count = 2;
      std::string              out_path;
      std::string              abstract_path;
    };

    int cmd_pfunc(PfuncArgs const& a, std::ostream& out) {
      std::optional<FunctionAlgebra> f;
      std::vector<std::string>       base_labels;
      if (a.mode == "all") {
        f = all_partial_functions(a.base_size, a.rank, a.cap);
      } else if (a.mode == "random") {
        f = random_closed_algebra(a.base_size, a.rank, a.count, a.seed, a.cap);
      } else {
        std::vector<PartialNFunction> gens;
        std::size_t                   base = a.base_size, rank = a.rank;
        if (!a.generators.empty()) {
          auto doc    = io::parse_function_set(io::read_file(a.generators));
          gens        = std::move(doc.functions);
          base        = doc.base.size();
          rank        = doc.rank;
          base_labels = std::move(doc.base);
        }
        f = close(base, rank, gens, a.cap);
      }
      auto doc = io::to_doc(*f);
      if (!base_labels.empty()) {
        doc.base = base_labels;
      }
      auto const text = io::dump_function_set(doc);
      if (a.out_path.empty()) {
        out << text;
      } else {
        io::write_file(a.out_path, text);
        out << "functions: " << f->size() << "\n";
      }
      if (!a.abstract_path.empty()) {
        io::write_file(a.abstract_path, io::dump_algebra({doc.names, make_abstract(*f)}));
      }
      return kOk;
    }

    int cmd_verify(std::string const& algebra_path, std::string const& rep_path, std::ostream& out, std::ostream& err) {
      auto const alg = io::parse_algebra(io::read_file(algebra_path));
      auto const rep = io::parse_representation(io::read_file(rep_path));
      if (rep.carrier != alg.labels || rep.rank != alg.algebra.rank()) {
        err << "representation carrier or rank does not match the algebra\n";
        return kBadInput;
      }
      auto const report = verify_representation(alg.algebra, io::to_representation(rep));
      print_report(out, "representation", report);
      return report.holds ? kOk : kViolation;
    }

    int cmd_translations(std::string const& path, std::optional<std::size_t> depth, std::ostream& out) {
      auto const  doc = io::parse_algebra(io::read_file(path));
      auto const& m   = doc.algebra.menger();
      auto const  t   = translations(m);
      out << "translations: " << t.size() << "\n";
      for (std::size_t k = 0; k < t.size(); ++k) {
        out << "  " << k << ": [";
        for (Element x = 0; x < m.size(); ++x) {
          out << (x ? " " : "") << doc.labels[t.apply(k, x)];
        }
        out << "]  " << t.generator_witness(k).to_string(m.rank()) << "\n";
      }
      if (!depth) {
        return kOk;
      }
      auto prev = translations_by_depth(m, 0);
      for (std::size_t d = 1; d <= *depth; ++d) {
        auto next = translations_by_depth(m, d);
        if (next == prev) {
          bool const agree = next == t.as_set();
          out << "oracle: converged at depth " << d - 1 << ", " << (agree ? "agreement confirmed" : "DISAGREEMENT")
              << "\n";
          return agree ? kOk : kViolation;
        }
        prev = std::move(next);
      }
      out << "oracle: no convergence by depth " << *depth << "\n";
      return kViolation;
    }

  }  // namespace

  int run(std::vector<std::string> const& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite subtraction Menger algebra toolkit"};
    app.require_subcommand(1);

    std::string path, axioms = "all";
    std::size_t max_witnesses = 10;
    auto*       check = app.add_subcommand("check", "check the axioms of an algebra file");
    check->add_option("path", path, "algebra file")->required();
    check->add_option("--axioms", axioms, "axiom group")
        ->check(CLI::IsMember({"all", "menger", "subtraction", "compat", "derived"}));
    check->add_option("--max-witnesses", max_witnesses, "witnesses kept per axiom");

    std::string rep_out, tie = "least";
    auto*       represent = app.add_subcommand("represent", "build and verify a representation by functions");
    represent->add_option("path", path, "algebra file")->required();
    represent->add_option("--out", rep_out, "representation file to write");
    represent->add_option("--tiebreak", tie, "filter generator choice")->check(CLI::IsMember({"least", "greatest"}));

    PfuncArgs pa;
    auto*     pfunc = app.add_subcommand("pfunc", "generate sets of partial functions");
    pfunc->add_option("mode", pa.mode, "close, all or random")->required()->check(CLI::IsMember({"close", "all", "random"}));
    pfunc->add_option("--base-size", pa.base_size, "size of the base set");
    pfunc->add_option("--rank", pa.rank, "number of arguments");
    pfunc->add_option("--generators", pa.generators, "function set file with generators");
    pfunc->add_option("--seed", pa.seed, "random seed");
    pfunc->add_option("--cap", pa.cap, "closure size limit");
    pfunc->add_option("--count", pa.count, "number of random generators");
    pfunc->add_option("--out", pa.out_path, "function set file to write (default stdout)");
    pfunc->add_option("--abstract", pa.abstract_path, "also write the abstract algebra file");

    std::string alg_path, verify_rep;
    auto*       verify = app.add_subcommand("verify", "verify a representation file against an algebra file");
    verify->add_option("algebra", alg_path, "algebra file")->required();
    verify->add_option("representation", verify_rep, "representation file")->required();

    std::optional<std::size_t> depth;
    auto* trans = app.add_subcommand("translations", "list the translation functions of an algebra");
    trans->add_option("path", path, "algebra file")->required();
    trans->add_option("--depth-oracle", depth, "cross-check against term enumeration up to this depth");

    std::vector<char const*> raw;
    for (auto const& a : argv) {
      raw.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? kOk : kBadInput;
    }

    try {
      if (*check) {
        return cmd_check(path, axioms, max_witnesses, out);
      }
      if (*represent) {
        return cmd_represent(path, rep_out, tie, out);
      }
      if (*pfunc) {
        return cmd_pfunc(pa, out);
      }
      if (*verify) {
        return cmd_verify(alg_path, verify_rep, out, err);
      }
      return cmd_translations(path, depth, out);
    } catch (ClosureCapExceeded const& e) {
      err << "error: " << e.what() << "\n";
      return kCapped;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (ShapeMismatch const& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (IndexOutOfRange const& e) {
      err << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kViolation;
    }
  }

}  // namespace menger::cli
