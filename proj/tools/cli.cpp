#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "bpistego/bench.hpp"
#include "bpistego/bits.hpp"
#include "bpistego/error.hpp"
#include "bpistego/io.hpp"
#include "bpistego/metrics.hpp"
#include "bpistego/pgm.hpp"
#include "bpistego/schemes.hpp"
#include "bpistego/steganalysis.hpp"

namespace bpistego::cli {
namespace {

namespace fs = std::filesystem;

struct EmbedArgs {
  std::string cover, message, scheme, out, key_out;
  std::uint64_t seed = 0;
};

struct ExtractArgs {
  std::string stego, key, out;
};

struct AnalyzeArgs {
  std::string image, method, out;
  int plane = 0;  // 0 = not given
  int steps = kDefaultPovSteps;
};

struct PsnrArgs {
  std::string cover, stego;
};

struct BenchArgs {
  std::string covers_dir, synthetic, out, summary;
  std::vector<double> rates{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<std::string> schemes{"lsb", "2lsb", "bpi"};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int steps = kDefaultPovSteps;
  std::size_t count = 10;
  std::size_t size = 256;
  unsigned threads = 0;
};

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

SchemeId scheme_or_throw(const std::string& token) {
  auto scheme = parse_scheme(token);
  if (!scheme) {
    throw CLI::ValidationError("--scheme",
                               "unknown scheme '" + token +
                                   "' (expected lsb, 2lsb or bpi)");
  }
  return *scheme;
}

int do_embed(const EmbedArgs& a, std::ostream& out) {
  const auto scheme = scheme_or_throw(a.scheme);
  const auto cover = read_pgm_file(a.cover);
  const auto message = pack_bits(read_binary_file(a.message));
  const auto result = embed(cover, message, scheme, a.seed);
  write_pgm_file(a.out, result.stego);
  write_text_file(a.key_out, format_stego_key(result.key) + "\n");
  out << "payload_bits=" << message.size()
      << " psnr_db=" << format_psnr(psnr(cover, result.stego).psnr_db) << "\n";
  return kOk;
}

int do_extract(const ExtractArgs& a, std::ostream&) {
  const auto key_bytes = read_binary_file(a.key);
  const auto key = parse_stego_key(
      std::string_view(reinterpret_cast<const char*>(key_bytes.data()),
                       key_bytes.size()));
  const auto stego = read_pgm_file(a.stego);
  const auto unpacked = unpack_bits(extract(stego, key));
  write_binary_file(a.out, unpacked.bytes);
  return kOk;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  std::string text;
  if (a.method == "pov") {
    if (a.plane != 0) {
      throw CLI::ValidationError("--plane", "not valid for method pov");
    }
    text = emit_pov_csv(pov_curve(read_pgm_file(a.image), a.steps));
  } else {
    int plane = 0;
    if (a.method == "ws") {
      if (a.plane > 1) {
        throw CLI::ValidationError("--plane", "ws analyses plane 1 only");
      }
    } else if (a.plane == 2) {
      plane = 1;
    }
    const auto estimate = mlsb_ws_estimate(read_pgm_file(a.image), plane);
    text = "estimate=" + fixed4(estimate.estimate) +
           ",clamped=" + fixed4(estimate.clamped()) + "\n";
  }
  if (a.out.empty()) {
    out << text;
  } else {
    write_text_file(a.out, text);
  }
  return kOk;
}

int do_psnr(const PsnrArgs& a, std::ostream& out) {
  const auto report = psnr(read_pgm_file(a.cover), read_pgm_file(a.stego));
  out << "mse=" << fixed4(report.mse)
      << " psnr_db=" << format_psnr(report.psnr_db) << "\n";
  return kOk;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  ExperimentConfig config;
  if (!a.covers_dir.empty()) {
    if (!fs::is_directory(a.covers_dir)) {
      throw IoError("cover directory not found: " + a.covers_dir);
    }
    for (const auto& entry : fs::directory_iterator(a.covers_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
        config.cover_paths.push_back(entry.path());
      }
    }
    std::sort(config.cover_paths.begin(), config.cover_paths.end());
    if (config.cover_paths.empty()) {
      throw InvalidArgument("empty cover set: no .pgm files in " +
                            a.covers_dir);
    }
  }
  if (!a.synthetic.empty()) {
    const auto kind = parse_cover_kind(a.synthetic);
    if (!kind) {
      throw CLI::ValidationError("--synthetic",
                                 "expected smooth or uniform");
    }
    config.synthetic = SyntheticCovers{*kind, a.count, a.size, a.size, 1};
  }
  config.rates = a.rates;
  config.schemes.clear();
  for (const auto& token : a.schemes) {
    config.schemes.push_back(scheme_or_throw(token));
  }
  config.seeds = a.seeds;
  config.steps = a.steps;
  config.threads = a.threads;

  const auto rows = run_grid(config);
  write_text_file(a.out, emit_csv(rows));
  if (!a.summary.empty()) {
    write_text_file(a.summary, emit_csv(average_over_seeds(rows)));
  }
  out << "rows=" << rows.size() << "\n";
  for (const auto& check : check_trends(rows)) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name << " ("
        << check.detail << ")\n";
  }
  return kOk;
}

// Splices `key=value` lines from `bench --config <file>` into the argument
// list as `--key value`. Flags given on the command line take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.empty() || args[0] != "bench") return args;
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || it + 1 == args.end()) return args;

  const auto bytes = read_binary_file(*(it + 1));
  std::istringstream in(std::string(bytes.begin(), bytes.end()));
  std::vector<std::string> out(args.begin(), it);
  out.insert(out.end(), it + 2, args.end());
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == ';' ||
        line[first] == '[') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConfigError("config line without '=': " + line);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string flag = "--" + trim(line.substr(first, eq - first));
    if (std::find(out.begin(), out.end(), flag) != out.end()) continue;
    out.push_back(flag);
    out.push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bitplane-index steganography and steganalysis toolkit",
               "bpistego"};
  app.require_subcommand(1, 1);

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Hide a message file in a PGM");
  embed_cmd->add_option("--cover", embed_args.cover)->required();
  embed_cmd->add_option("--message", embed_args.message)->required();
  embed_cmd->add_option("--scheme", embed_args.scheme, "lsb | 2lsb | bpi")
      ->required();
  embed_cmd->add_option("--seed", embed_args.seed)->required();
  embed_cmd->add_option("--out", embed_args.out)->required();
  embed_cmd->add_option("--key-out", embed_args.key_out)->required();

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a message");
  extract_cmd->add_option("--stego", extract_args.stego)->required();
  extract_cmd->add_option("--key", extract_args.key)->required();
  extract_cmd->add_option("--out", extract_args.out)->required();

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run a steganalyser");
  analyze_cmd->add_option("--image", analyze_args.image)->required();
  analyze_cmd->add_option("--method", analyze_args.method)
      ->required()
      ->check(CLI::IsMember({"pov", "ws", "mlsbws"}));
  analyze_cmd->add_option("--plane", analyze_args.plane, "1 or 2")
      ->check(CLI::Range(1, 2));
  analyze_cmd->add_option("--steps", analyze_args.steps)
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", analyze_args.out);

  PsnrArgs psnr_args;
  auto* psnr_cmd = app.add_subcommand("psnr", "Cover/stego distortion");
  psnr_cmd->add_option("--cover", psnr_args.cover)->required();
  psnr_cmd->add_option("--stego", psnr_args.stego)->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run the experiment grid");
  std::string config_path;
  bench_cmd->add_option("--config", config_path,
                        "key=value file; keys are bench flag names");
  auto* covers_opt = bench_cmd->add_option("--covers", bench_args.covers_dir,
                                           "directory of .pgm covers");
  auto* synth_opt = bench_cmd->add_option("--synthetic", bench_args.synthetic,
                                          "smooth | uniform");
  covers_opt->excludes(synth_opt);
  bench_cmd->add_option("--rates", bench_args.rates)
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--schemes", bench_args.schemes)->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds)->delimiter(',');
  bench_cmd->add_option("--steps", bench_args.steps)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--count", bench_args.count, "synthetic cover count")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--size", bench_args.size, "synthetic cover side")
      ->check(CLI::Range(3, 8192));
  bench_cmd->add_option("--threads", bench_args.threads);
  bench_cmd->add_option("--out", bench_args.out)->required();
  bench_cmd->add_option("--summary", bench_args.summary,
                        "per-cell means over seeds");

  try {
    const auto expanded = expand_config(args);
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
    if (bench_cmd->parsed() && bench_args.covers_dir.empty() &&
        bench_args.synthetic.empty()) {
      throw CLI::RequiredError("--covers or --synthetic");
    }
    if (embed_cmd->parsed()) return do_embed(embed_args, out);
    if (extract_cmd->parsed()) return do_extract(extract_args, out);
    if (analyze_cmd->parsed()) return do_analyze(analyze_args, out);
    if (psnr_cmd->parsed()) return do_psnr(psnr_args, out);
    return do_bench(bench_args, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InconsistentKey& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace bpistego::cli
