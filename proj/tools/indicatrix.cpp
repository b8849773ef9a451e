#include "indicatrix/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace indicatrix;

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kRejected = 2;
constexpr int kExhausted = 3;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<ClosedInterval> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    const Rat y = Rat::parse(text);
    return ClosedInterval{y, y};
  }
  return ClosedInterval{Rat::parse(text.substr(0, comma)), Rat::parse(text.substr(comma + 1))};
}

std::vector<Rat> random_levels(std::size_t count, std::uint64_t seed, const std::optional<ClosedInterval>& window) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den(2, 997);
  std::vector<Rat> out;
  const ClosedInterval span = window.value_or(ClosedInterval{Rat(0), Rat(1)});
  for (std::size_t i = 0; i < count; ++i) {
    const long d = den(rng);
    std::uniform_int_distribution<long> num(0, d);
    out.push_back(span.lo + span.length() * Rat(num(rng), d));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banach indicatrix validator and constructor"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::size_t depth = 4;
  std::size_t stages = 3;
  std::size_t seq_depth = 8;
  std::string window_text;
  std::string x_text;
  std::string y_text;
  std::string eps_text;
  std::size_t levels = 32;
  std::uint64_t seed = 0;
  std::size_t stage = 0;
  std::size_t points = 101;
  int digits = 0;

  auto* validate_cmd = app.add_subcommand("validate", "decide whether a spec is an indicatrix");
  validate_cmd->add_option("spec", input, "spec JSON")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "print the simple preindicatrix stream");
  decompose_cmd->add_option("spec", input, "spec JSON")->required();
  decompose_cmd->add_option("--depth", depth, "last item index");

  auto* build_cmd = app.add_subcommand("build", "construct the stages and write an artifact");
  build_cmd->add_option("spec", input, "spec JSON")->required();
  build_cmd->add_option("--stages", stages, "rectangle levels 0..N");
  build_cmd->add_option("--seq-depth", seq_depth, "halvings materialized per infinite sequence");
  build_cmd->add_option("--window", window_text, "only build what meets y-window lo,hi (or a single level)");
  build_cmd->add_option("-o,--output", output, "artifact path")->required();

  auto* eval_cmd = app.add_subcommand("eval", "F(x) to within eps");
  eval_cmd->add_option("artifact", input)->required();
  eval_cmd->add_option("--x", x_text)->required();
  eval_cmd->add_option("--eps", eps_text)->required();

  auto* sections_cmd = app.add_subcommand("sections", "section report at level y");
  sections_cmd->add_option("artifact", input)->required();
  sections_cmd->add_option("--y", y_text)->required();
  sections_cmd->add_option("--depth", depth);

  auto* verify_cmd = app.add_subcommand("verify", "re-check a stored artifact");
  verify_cmd->add_option("artifact", input)->required();
  verify_cmd->add_option("--levels", levels, "random levels to sample");
  verify_cmd->add_option("--seed", seed);

  auto* plot_cmd = app.add_subcommand("plot", "SVG of one stage");
  plot_cmd->add_option("artifact", input)->required();
  plot_cmd->add_option("--stage", stage);
  plot_cmd->add_option("-o,--output", output)->required();

  auto* sample_cmd = app.add_subcommand("sample", "CSV samples of one stage");
  sample_cmd->add_option("artifact", input)->required();
  sample_cmd->add_option("--stage", stage);
  sample_cmd->add_option("--points", points);
  sample_cmd->add_option("--decimal-digits", digits);
  sample_cmd->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (validate_cmd->parsed()) {
      const SpecFile sf = spec_file_from_json(read_json_file(input));
      const ValidationResult r = validate(sf.spec, sf.a, sf.b);
      print(validation_to_json(r));
      return r.ok() ? kOk : kRejected;
    }

    if (decompose_cmd->parsed()) {
      const SpecFile sf = spec_file_from_json(read_json_file(input));
      const ValidationResult r = validate(sf.spec, sf.a, sf.b);
      if (!r.ok()) {
        print(validation_to_json(r));
        return kRejected;
      }
      auto [reduced, plan] = reduce_exceptional(sf.spec, *r.certificate);
      const StepSpec core = hat_spec(reduced, min(sf.a, sf.b), max(sf.a, sf.b));
      SimpleStream stream = simple_stream(core, depth);
      json j;
      json pl = json::array();
      for (const auto& e : plan.entries) pl.push_back(e.level.str());
      j["plateauLevels"] = pl;
      j["core"] = spec_to_json(core);
      json items = json::array();
      for (std::size_t i = 0; i <= depth; ++i) {
        json it;
        it["p"] = spec_to_json(stream.item(i));
        if (i + 1 < stream.residuals().size()) it["rest"] = spec_to_json(stream.residuals()[i + 1]);
        if (stream.residuals().size() > i + 1 && stream.residuals()[i].all_finite())
          it["partial"] = spec_to_json(partial_indicatrix(stream, i));
        items.push_back(it);
      }
      j["items"] = items;
      j["stabilizedAt"] = stream.stabilized_at() ? json(*stream.stabilized_at()) : json(nullptr);
      print(j);
      return kOk;
    }

    if (build_cmd->parsed()) {
      const SpecFile sf = spec_file_from_json(read_json_file(input));
      const ValidationResult r = validate(sf.spec, sf.a, sf.b);
      if (!r.ok()) {
        print(validation_to_json(r));
        return kRejected;
      }
      BuildOptions opts;
      opts.stages = stages;
      opts.seq_depth = seq_depth;
      opts.window = parse_window(window_text);
      const Assembly s = assemble(sf.spec, sf.a, sf.b, opts);
      write_text_file(output, assembly_to_json(s).dump(1) + "\n");
      json j{{"artifact", output},
             {"mode", mode_name(s.core.mode)},
             {"stages", s.stages.size()},
             {"rectangles", s.core.rects.size()},
             {"errorBound", s.core.error_bound(s.core.top()).str()}};
      print(j);
      return kOk;
    }

    const Assembly s = assembly_from_json(read_json_file(input));

    if (eval_cmd->parsed()) {
      try {
        const LimitValue v = eval_limit(s, Rat::parse(x_text), Rat::parse(eps_text));
        print(json{{"x", x_text}, {"value", v.value.str()}, {"stage", v.stage}, {"bound", v.bound.str()}});
        return kOk;
      } catch (const DepthExhausted& e) {
        print(json{{"error", "depth exhausted"}, {"achievableBound", e.achievable.str()}});
        return kExhausted;
      }
    }

    if (sections_cmd->parsed()) {
      print(section_to_json(section_report(s, Rat::parse(y_text), depth)));
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const auto fails = verify_assembly(s, random_levels(levels, seed, s.core.opts.window));
      json f = json::array();
      for (const auto& m : fails) f.push_back(m);
      print(json{{"ok", fails.empty()}, {"failures", f}});
      return fails.empty() ? kOk : kMalformed;
    }

    if (stage > s.top()) throw SpecError("stage " + std::to_string(stage) + " was not built");
    if (plot_cmd->parsed()) {
      write_text_file(output, plot_svg(s.stages[stage]));
      return kOk;
    }
    if (sample_cmd->parsed()) {
      write_text_file(output, sample_csv(s.stages[stage], points, digits));
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
