// Command-line front end: bracket and intersection-number queries on
// surfaces with free fundamental group, batch mode, and the oracle suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "loops/query.hpp"
#include "loops/verify.hpp"

namespace {

struct GlobalOpts {
  std::string format = "text";
  bool show_raw = false;
};

void emit(const loops::ResultRecord& res, const GlobalOpts& opts) {
  if (opts.format == "json") {
    std::cout << res.json.dump() << '\n';
  } else {
    std::cout << res.text;
  }
}

int finish(const loops::ResultRecord& res, const GlobalOpts& opts) {
  emit(res, opts);
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brackets and minimal intersection numbers of loops on "
               "surfaces with free fundamental group"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("LOOPCALC_FORMAT");
  app.add_flag("--show-raw", opts.show_raw,
               "include the raw signed term list in bracket output");

  // global flags remain usable after the subcommand name
  app.fallthrough();
  std::string surface;
  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("--surface", surface,
                    "surface spec: rose:<dirs>, pants, torus1, or "
                    "genus=<g>,boundary=<r>")
        ->envname("LOOPCALC_SURFACE")
        ->required();
  };

  std::string w1, w2;
  long p = 0, q = 0;

  CLI::App* amr = app.add_subcommand("amr", "chord-diagram Poisson bracket");
  add_surface(amr);
  amr->add_option("w1", w1)->required();
  amr->add_option("w2", w2)->required();

  CLI::App* goldman = app.add_subcommand("goldman", "Goldman Lie bracket");
  add_surface(goldman);
  goldman->add_option("w1", w1)->required();
  goldman->add_option("w2", w2)->required();

  CLI::App* minint =
      app.add_subcommand("minint", "minimal intersection number");
  add_surface(minint);
  minint->add_option("w1", w1)->required();
  minint->add_option("w2", w2)->required();

  CLI::App* selfint =
      app.add_subcommand("selfint", "minimal self-intersection number");
  add_surface(selfint);
  selfint->add_option("w1", w1)->required();

  CLI::App* theorem2 = app.add_subcommand(
      "theorem2", "self-intersection from the bracket of two powers");
  add_surface(theorem2);
  theorem2->add_option("w1", w1)->required();
  theorem2->add_option("p", p)->required();
  theorem2->add_option("q", q)->required();

  CLI::App* torus =
      app.add_subcommand("torus", "minimal intersection number on the torus");
  torus->add_option("c1", w1, "first class as (m,l)")->required();
  torus->add_option("c2", w2, "second class as (m,l)")->required();

  std::string batch_path;
  CLI::App* batch =
      app.add_subcommand("batch", "run a JSON-lines file of query records");
  batch->add_option("path", batch_path)->required();

  unsigned long seed = 7;
  long budget = 200;
  CLI::App* verify =
      app.add_subcommand("verify", "run the randomized oracle suite");
  verify->add_option("--seed", seed, "RNG seed")->envname("LOOPCALC_SEED");
  verify->add_option("--budget", budget, "cases per property")
      ->envname("LOOPCALC_BUDGET");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage and parse problems exit 1
  }

  try {
    loops::QueryRecord rec;
    rec.surface = surface;
    rec.w1 = w1;
    rec.w2 = w2;
    if (app.got_subcommand(amr)) {
      rec.mode = "amr";
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(goldman)) {
      rec.mode = "goldman";
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(minint)) {
      rec.mode = "minint";
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(selfint)) {
      rec.mode = "selfint";
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(theorem2)) {
      rec.mode = "theorem2";
      rec.p = p;
      rec.q = q;
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(torus)) {
      rec.mode = "torus";
      return finish(loops::run_query(rec, opts.show_raw), opts);
    }
    if (app.got_subcommand(batch)) {
      std::ifstream in(batch_path);
      if (!in) {
        std::cerr << "error: cannot open '" << batch_path << "'\n";
        return 1;
      }
      auto results = loops::run_batch(in, opts.show_raw);
      for (const auto& res : results) emit(res, opts);
      return 0;
    }
    if (app.got_subcommand(verify)) {
      loops::verify::Report rep = loops::verify::run(seed, budget);
      if (opts.format == "json") {
        nlohmann::json j;
        j["schema"] = loops::kResultSchema;
        j["seed"] = seed;
        j["budget"] = budget;
        j["properties"] = nlohmann::json::array();
        for (const auto& prop : rep.properties) {
          j["properties"].push_back({{"name", prop.name},
                                     {"pass", prop.pass},
                                     {"cases", prop.cases},
                                     {"detail", prop.detail}});
        }
        j["ok"] = rep.all_pass();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "verify seed=" << seed << " budget=" << budget << '\n'
                  << rep.text();
      }
      return rep.all_pass() ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
