#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cellx/errors.hpp"
#include "cellx/io.hpp"
#include "cellx/lattice.hpp"
#include "cellx/ops.hpp"
#include "cellx/oracle.hpp"
#include "cellx/random.hpp"
#include "cellx/reduce.hpp"

namespace cellx::cli {

namespace {

struct Globals {
  std::string ring;
  std::uint64_t seed = 0;
  std::uint64_t guard = SizeGuard{}.max_search_space;
  bool force = false;
  std::string output = "compact";

  OutputMode mode() const {
    if (output == "pretty") return OutputMode::Pretty;
    if (output == "explain") return OutputMode::Explain;
    return OutputMode::Compact;
  }
  ParseOptions parse_options() const {
    ParseOptions o;
    if (!ring.empty()) o.ring = RingSpec::parse(ring);
    o.force = force;
    return o;
  }
  RingSpec required_ring() const {
    if (ring.empty()) throw UsageError("--ring is required");
    return RingSpec::parse(ring);
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidComplex(path + ": " + e.what(), -1);
  }
}

ChainComplex load(const std::string& path, const Globals& g) {
  try {
    return complex_from_json(read_json(path), g.parse_options());
  } catch (const InvalidComplex& e) {
    throw InvalidComplex(path + ": " + e.what(), e.degree());
  }
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Decomposition and cellularity of perfect complexes over Z/p^2 and F_p[X]/(X^2)",
                 "cellx"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", g_.ring, "ring, e.g. zpsq:2 or dual:3");
    app.add_option("--seed", g_.seed, "random seed");
    app.add_option("--guard", g_.guard, "largest search space a brute-force check may face");
    app.add_flag("--force", g_.force, "load complexes with d∘d != 0 (diagnosis only)");
    app.add_option("--output", g_.output, "output mode")
        ->check(CLI::IsMember({"compact", "pretty", "explain"}));

    std::function<int()> action;
    auto sub = [&](const std::string& name, const std::string& help) {
      return app.add_subcommand(name, help);
    };

    std::string x_path, y_path;
    auto one_file = [&](CLI::App* s) { s->add_option("X", x_path, "complex file")->required(); };
    auto two_files = [&](CLI::App* s, const char* second) {
      s->add_option("X", x_path, "complex file")->required();
      s->add_option(second, y_path, "complex file")->required();
    };

    auto* validate_cmd = sub("validate", "check shapes, entries and d∘d = 0");
    one_file(validate_cmd);
    validate_cmd->callback([&] { action = [&] { return cmd_validate(x_path); }; });

    auto* homology_cmd = sub("homology", "homology as R^a + k^b per degree");
    one_file(homology_cmd);
    homology_cmd->callback([&] {
      action = [&] { return emit(Json{{"homology", to_json(homology(load(x_path, g_)))}}); };
    });

    auto* minimize_cmd = sub("minimize", "split off disks, with basis-change certificates");
    one_file(minimize_cmd);
    minimize_cmd->callback(
        [&] { action = [&] { return emit(to_json(minimize(load(x_path, g_)))); }; });

    auto* decompose_cmd = sub("decompose", "interval and disk summands");
    one_file(decompose_cmd);
    decompose_cmd->callback(
        [&] { action = [&] { return emit(to_json(decompose(load(x_path, g_)))); }; });

    auto* cell_cmd = sub("cell", "decide X >> A (exit 0 if it holds, 1 if not)");
    two_files(cell_cmd, "A");
    cell_cmd->callback([&] {
      action = [&] { return verdict(is_cellular(load(x_path, g_), load(y_path, g_))); };
    });

    auto* acyclic_cmd = sub("acyclic", "decide X > A (exit 0 if it holds, 1 if not)");
    two_files(acyclic_cmd, "A");
    acyclic_cmd->callback([&] {
      action = [&] { return verdict(is_acyclic_over(load(x_path, g_), load(y_path, g_))); };
    });

    auto* cone_cmd = sub("cone", "mapping cone of a chain map file");
    cone_cmd->add_option("F", x_path, "chain map file")->required();
    cone_cmd->callback([&] {
      action = [&] {
        ChainMap f = [&] {
          try {
            return chain_map_from_json(read_json(x_path), g_.parse_options());
          } catch (const InvalidComplex& e) {
            throw InvalidComplex(x_path + ": " + e.what(), e.degree());
          }
        }();
        return emit(to_json(cone(f)));
      };
    });

    auto* sum_cmd = sub("sum", "direct sum");
    two_files(sum_cmd, "Y");
    sum_cmd->callback([&] {
      action = [&] { return emit(to_json(direct_sum(load(x_path, g_), load(y_path, g_)))); };
    });

    auto* tensor_cmd = sub("tensor", "tensor product");
    two_files(tensor_cmd, "Y");
    tensor_cmd->callback([&] {
      action = [&] { return emit(to_json(tensor(load(x_path, g_), load(y_path, g_)))); };
    });

    auto* hom_cmd = sub("hom", "hom-complex from X to Y");
    two_files(hom_cmd, "Y");
    hom_cmd->callback([&] {
      action = [&] { return emit(to_json(hom_complex(load(x_path, g_), load(y_path, g_)))); };
    });

    int shift_by = 0;
    auto* shift_cmd = sub("shift", "suspension by n");
    one_file(shift_cmd);
    shift_cmd->add_option("n", shift_by, "shift amount, >= 0")->required();
    shift_cmd->callback([&] {
      action = [&] {
        if (shift_by < 0) throw UsageError("shift amount must be >= 0");
        return emit(to_json(shift(load(x_path, g_), shift_by)));
      };
    });

    std::string gen_kind;
    std::vector<int> gen_params;
    auto* gen_cmd = sub("gen", "emit interval I J, sphere N or disk N");
    gen_cmd->add_option("kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"interval", "sphere", "disk"}));
    gen_cmd->add_option("params", gen_params)->required();
    gen_cmd->callback([&] { action = [&] { return cmd_gen(gen_kind, gen_params); }; });

    RandomComplexOptions rand_opts;
    bool allow_units = false;
    auto* rand_cmd = sub("rand", "seeded random complex");
    rand_cmd->add_option("--max-degree", rand_opts.max_degree)->check(CLI::NonNegativeNumber);
    rand_cmd->add_option("--max-rank", rand_opts.max_rank);
    rand_cmd->add_flag("--allow-units", allow_units,
                       "arbitrary entries, redrawn until d∘d = 0 (budgeted)");
    rand_cmd->callback([&] {
      action = [&] {
        Rng rng(g_.seed);
        const auto ring = g_.required_ring();
        return emit(to_json(allow_units ? random_complex_with_units(ring, rand_opts, rng)
                                        : random_minimal_complex(ring, rand_opts, rng)));
      };
    });

    auto* cross_cmd = sub("crosscheck", "compare the X >> A verdict with brute force");
    two_files(cross_cmd, "A");
    cross_cmd->callback([&] {
      action = [&] {
        const auto c = cross_check(load(x_path, g_), load(y_path, g_), SizeGuard{g_.guard});
        Json report = agreement_entry(x_path, y_path, c, g_.seed);
        emit(report);
        return c.agree ? kOk : kRelationFails;
      };
    });

    auto* ext_cmd = sub("extension", "random extension 0 -> X -> Y -> Z -> 0");
    two_files(ext_cmd, "Z");
    ext_cmd->callback([&] {
      action = [&] {
        const auto e = random_extension(load(x_path, g_), load(y_path, g_), g_.seed);
        Json j;
        j["extension"] = to_json(e.extension);
        j["connecting"] = Json::array();
        for (const auto& h : e.connecting) j["connecting"].push_back(to_json(h));
        j["seed"] = e.seed;
        return emit(j);
      };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }

    try {
      return action();
    } catch (const InvalidComplex& e) {
      err_ << "invalid input";
      if (e.degree() >= 0) err_ << " (degree " << e.degree() << ")";
      err_ << ": " << e.what() << "\n";
      return kInvalidInput;
    } catch (const GuardRefusal& e) {
      err_ << "refused: " << e.what() << "\n";
      return kGuardRefused;
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

 private:
  int emit(const Json& j) {
    out_ << dump(j, g_.mode()) << "\n";
    return kOk;
  }

  int verdict(const Verdict& v) {
    Json j = to_json(v);
    if (g_.mode() == OutputMode::Explain) j["explanation"] = explain(v);
    emit(j);
    return v.holds ? kOk : kRelationFails;
  }

  int cmd_validate(const std::string& path) {
    Globals loose = g_;
    loose.force = true;
    const ChainComplex x = load(path, loose);
    if (auto diag = validate(x)) throw InvalidComplex(path + ": " + diag->message, diag->degree);
    return emit(Json{{"valid", true}, {"ranks", x.ranks()}});
  }

  int cmd_gen(const std::string& kind, const std::vector<int>& params) {
    const auto ring = g_.required_ring();
    const std::size_t want = kind == "interval" ? 2 : 1;
    if (params.size() != want)
      throw UsageError("gen " + kind + " takes " + std::to_string(want) + " parameter(s)");
    for (int v : params)
      if (v < 0) throw UsageError("gen parameters must be >= 0");
    if (kind == "interval") return emit(to_json(interval(ring, params[0], params[1])));
    if (kind == "sphere") return emit(to_json(sphere(ring, params[0])));
    return emit(to_json(disk(ring, params[0])));
  }

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace cellx::cli
