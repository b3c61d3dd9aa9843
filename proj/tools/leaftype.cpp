#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leaftype/cayley.hpp"
#include "leaftype/config.hpp"
#include "leaftype/error.hpp"

namespace fs = std::filesystem;
using namespace leaftype;

namespace {

enum Exit { classified = 0, invalid = 1, budget = 2, inconclusive = 3 };

struct Run {
  std::string config;
  std::vector<unsigned> radii{2, 4, 6};
  int search_bound = 6;
  std::size_t budget = default_vertex_budget;
  std::string out = ".";
};

void write_file(fs::path const& path, std::string const& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw InvalidInput("cannot write " + path.string());
  }
  f << text;
}

std::string pretty(nlohmann::json const& j) { return j.dump(2) + "\n"; }

void check(Run const& r) {
  if (r.radii.empty()) {
    throw InvalidInput("--radius needs at least one value");
  }
  for (std::size_t i = 1; i < r.radii.size(); ++i) {
    if (r.radii[i] <= r.radii[i - 1]) {
      throw InvalidInput("--radius must be strictly increasing");
    }
  }
  if (r.budget == 0) {
    throw InvalidInput("--budget must be positive");
  }
  if (r.search_bound < 1) {
    throw InvalidInput("--search-bound must be positive");
  }
  fs::create_directories(r.out);
}

ClassifyOptions options_of(Run const& r) {
  ClassifyOptions o;
  o.search_bound = r.search_bound;
  o.radii = r.radii;
  o.vertex_budget = r.budget;
  return o;
}

int cmd_classify(Run const& r) {
  auto verdict = classify(load_config(r.config), options_of(r));
  auto text = pretty(to_json(verdict));
  write_file(fs::path(r.out) / "verdict.json", text);
  std::cout << text;
  if (verdict.label) {
    return classified;
  }
  return verdict.budget_limited ? budget : inconclusive;
}

int cmd_ball(Run const& r) {
  auto cfg = load_config(r.config);
  auto rep = working_representation(cfg);
  for (unsigned n : r.radii) {
    auto ball = build_ball(rep, n, r.budget);
    auto stem = fs::path(r.out) / ("ball_" + std::to_string(n));
    write_file(stem.string() + ".json", pretty(ball_to_json(ball, rep.surface(), cfg.symbols)));
    write_file(stem.string() + ".dot", export_dot(ball, rep.surface()));
    std::cout << "N=" << n << " vertices=" << ball.size() << " edges=" << ball.edges().size()
              << (ball.saturated() ? " saturated" : "") << "\n";
  }
  return classified;
}

int cmd_surface(Run const& r) {
  auto cfg = load_config(r.config);
  auto rep = working_representation(cfg);
  auto rows = genus_growth(rep, r.radii, r.budget);
  auto report = nlohmann::json::array();
  bool over = false;
  std::printf("%4s %8s %4s %6s\n", "N", "chi", "r", "genus");
  for (auto const& row : rows) {
    if (row.invariants) {
      auto const& inv = *row.invariants;
      report.push_back(to_json(inv));
      std::printf("%4u %8ld %4zu %6ld\n", inv.radius, inv.chi, inv.boundary_components, inv.genus);
    } else {
      over = true;
      report.push_back({{"N", row.radius}, {"error", row.error}});
      std::printf("%4u  %s\n", row.radius, row.error.c_str());
    }
  }
  write_file(fs::path(r.out) / "surface.json", pretty(report));
  return over ? budget : classified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological type of generic leaves from holonomy data"};
  app.require_subcommand(1);
  Run run;
  auto add_common = [&run](CLI::App* sub) {
    sub->add_option("--config", run.config, "JSON config file")->required();
    sub->add_option("--radius", run.radii, "comma-separated radii")->delimiter(',');
    sub->add_option("--search-bound", run.search_bound, "max exponent in the witness search");
    sub->add_option("--budget", run.budget, "vertex budget per ball");
    sub->add_option("--out", run.out, "output directory");
  };
  auto* c = app.add_subcommand("classify", "classify the generic leaf");
  auto* b = app.add_subcommand("ball", "export Cayley balls as JSON and DOT");
  auto* s = app.add_subcommand("surface", "glued-surface invariants per radius");
  for (auto* sub : {c, b, s}) {
    add_common(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : invalid;
  }
  try {
    check(run);
    if (c->parsed()) {
      return cmd_classify(run);
    }
    if (b->parsed()) {
      return cmd_ball(run);
    }
    return cmd_surface(run);
  } catch (InvalidInput const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return invalid;
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return budget;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  }
}
