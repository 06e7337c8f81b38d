// Command-line front end: decide embeddings, test badness, generate and
// color UP bad sequences, run audit suites. One JSON document per
// invocation on stdout. Exit codes: 0 success/pass, 1 property violation
// found, 2 invalid input.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bqo/audit.hpp"
#include "bqo/colorer.hpp"
#include "bqo/derive.hpp"
#include "bqo/embed.hpp"
#include "bqo/error.hpp"
#include "bqo/order.hpp"
#include "bqo/spec.hpp"
#include "bqo/upseq.hpp"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

ordered_json parse_json_arg(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bqo::InputError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

ordered_json witness_json(const std::optional<bqo::EmbedWitness>& w) {
  if (!w) return nullptr;
  ordered_json a = ordered_json::array();
  for (auto [i, j] : *w) a.push_back(ordered_json::array({i, j}));
  return a;
}

int run_check(const std::string& spec_path, const std::string& left,
              const std::string& right) {
  auto spec = bqo::load_spec_file(spec_path);
  bqo::Element x = bqo::element_from_json(*spec, parse_json_arg(left, "--left"));
  bqo::Element y = bqo::element_from_json(*spec, parse_json_arg(right, "--right"));
  ordered_json out;
  switch (spec->kind) {
    case bqo::QoSpec::Kind::Seq:
    case bqo::QoSpec::Kind::LinOrd: {
      auto w = bqo::le_higman(*spec->of, x.kids, y.kids);
      out["leq"] = w.has_value();
      out["witness"] = witness_json(w);
      break;
    }
    case bqo::QoSpec::Kind::Tree1: {
      auto w = bqo::le_tree_inj(*spec->of, x, y);
      out["leq"] = w.has_value();
      out["witness"] = witness_json(w);
      break;
    }
    case bqo::QoSpec::Kind::TreeM: {
      auto w = bqo::le_tree_mono(*spec->of, x, y);
      out["leq"] = w.has_value();
      out["witness"] = witness_json(w);
      break;
    }
    default:
      out["leq"] = bqo::leq(*spec, x, y);
      break;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_bad(const std::string& spec_path, const std::string& xarg) {
  auto spec = bqo::load_spec_file(spec_path);
  bqo::UpSeq x = bqo::up_from_json(*spec, parse_json_arg(xarg, "--x"));
  ordered_json out;
  bool bad = true;
  for (size_t k = 0; k <= x.state_count() && bad; ++k) {
    if (bqo::leq(*spec, x.at(k), x.at(k + 1))) {
      bad = false;
      ordered_json v;
      v["k"] = k;
      v["x_k"] = bqo::element_to_json(*spec, x.at(k));
      v["x_k1"] = bqo::element_to_json(*spec, x.at(k + 1));
      out["bad"] = false;
      out["violation"] = std::move(v);
    }
  }
  if (bad) out["bad"] = true;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_gen_bad(const std::string& spec_path, uint64_t seed,
                const bqo::GenBounds& bounds) {
  auto spec = bqo::load_spec_file(spec_path);
  auto samples = bqo::gen_bad(*spec, seed, bounds);
  ordered_json out;
  out["spec"] = bqo::spec_to_string(*spec);
  out["seed"] = seed;
  out["requested"] = bounds.count;
  out["found"] = samples.size();
  out["samples"] = ordered_json::array();
  for (const auto& x : samples) out["samples"].push_back(bqo::up_to_json(*spec, x));
  std::cout << out.dump() << "\n";
  return 0;
}

int run_color(const std::string& spec_path, const std::string& xarg) {
  auto spec = bqo::load_spec_file(spec_path);
  bqo::UpSeq x = bqo::up_from_json(*spec, parse_json_arg(xarg, "--x"));
  bqo::ColorResult r = bqo::color(*spec, x);
  std::cout << bqo::color_to_json(r).dump() << "\n";
  return 0;
}

int run_derive(const std::string& spec_path, const std::string& xarg) {
  auto spec = bqo::load_spec_file(spec_path);
  bqo::UpSeq x = bqo::up_from_json(*spec, parse_json_arg(xarg, "--x"));
  std::cout << bqo::derive_to_json(*spec, x).dump() << "\n";
  return 0;
}

int run_audit(const std::string& spec_path, const std::string& suite,
              uint64_t seed, const bqo::GenBounds& bounds, int bound,
              bool timing) {
  auto spec = bqo::load_spec_file(spec_path);
  auto started = std::chrono::steady_clock::now();
  bqo::Report rep;
  if (suite == "properness") {
    rep = bqo::audit_properness(*spec, seed, bounds);
  } else if (suite == "oracle-equiv") {
    rep = bqo::audit_oracle_equiv(*spec, bound);
  } else if (suite == "identities") {
    rep = bqo::audit_identities(*spec, seed, bounds);
  } else if (suite == "linearization") {
    if (spec->kind != bqo::QoSpec::Kind::Finite)
      throw bqo::InputError("linearization audit: give the label spec (finite)");
    rep = bqo::audit_linearization(*spec, bound);
  } else if (suite == "emptiness") {
    rep = bqo::audit_emptiness(*spec, bounds);
  } else {
    throw bqo::InputError("unknown audit suite '" + suite +
                          "' (properness, oracle-equiv, identities, "
                          "linearization, emptiness)");
  }
  if (timing) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    rep["elapsed_ms"] = elapsed.count();  // opt-in: keeps default reports byte-stable
  }
  std::cout << rep.dump() << "\n";
  return rep["passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional quasi-orders: embedding deciders and proper "
               "3-colorings of shift orbits on UP bad sequences"};
  app.require_subcommand(1);

  std::string spec_path, left, right, xarg, suite = "properness";
  uint64_t seed = 1;
  bqo::GenBounds bounds;
  int bound = 3;
  bool timing = false;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "spec file (JSON)")->required();
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--count", bounds.count, "samples to request");
    cmd->add_option("--max-pre", bounds.max_pre, "max preperiod length");
    cmd->add_option("--max-per", bounds.max_per, "max period length");
    cmd->add_option("--max-size", bounds.max_size, "max element size");
  };

  CLI::App* check = app.add_subcommand("check", "decide x <= y, with witness where applicable");
  add_spec(check);
  check->add_option("--left", left, "element literal (JSON)")->required();
  check->add_option("--right", right, "element literal (JSON)")->required();

  CLI::App* bad = app.add_subcommand("bad", "test whether a UP sequence is bad");
  add_spec(bad);
  bad->add_option("--x", xarg, "UP literal (JSON)")->required();

  CLI::App* gen = app.add_subcommand("gen-bad", "generate seeded UP bad sequences");
  add_spec(gen);
  gen->add_option("--seed", seed, "RNG seed");
  add_bounds(gen);

  CLI::App* col = app.add_subcommand("color", "color one UP bad sequence, with trace");
  add_spec(col);
  col->add_option("--x", xarg, "UP literal (JSON)")->required();

  CLI::App* der = app.add_subcommand("derive", "derivation chain, stabilization, witness");
  add_spec(der);
  der->add_option("--x", xarg, "UP literal (JSON)")->required();

  CLI::App* aud = app.add_subcommand("audit", "run an audit suite, print its report");
  add_spec(aud);
  aud->add_option("--suite", suite,
                  "properness | oracle-equiv | identities | linearization | emptiness");
  aud->add_option("--seed", seed, "RNG seed");
  aud->add_option("--bound", bound, "size/node bound for exhaustive suites");
  add_bounds(aud);
  aud->add_flag("--timing", timing, "include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(spec_path, left, right);
    if (bad->parsed()) return run_bad(spec_path, xarg);
    if (gen->parsed()) return run_gen_bad(spec_path, seed, bounds);
    if (col->parsed()) return run_color(spec_path, xarg);
    if (der->parsed()) return run_derive(spec_path, xarg);
    if (aud->parsed()) return run_audit(spec_path, suite, seed, bounds, bound, timing);
  } catch (const bqo::InputError& e) {
    ordered_json out;
    out["error"] = e.what();
    std::cout << out.dump() << "\n";
    return 2;
  } catch (const bqo::PipelineBug& e) {
    ordered_json out;
    out["error"] = std::string("internal invariant violated: ") + e.what();
    std::cout << out.dump() << "\n";
    return 1;
  }
  return 2;
}
