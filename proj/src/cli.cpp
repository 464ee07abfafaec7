#include "isac/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isac/error.hpp"
#include "isac/hopping.hpp"
#include "isac/primes.hpp"

namespace isac::cli {

namespace {

constexpr Slot kRandomAutoSlots = 1'000'000;

int to_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(std::span<const ChannelId> cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cs[i].value);
  }
  return s + "}";
}

std::string_view model_name(AvailabilityModel m) {
  return m == AvailabilityModel::kSymmetric ? "symmetric" : "asymmetric";
}

// Raw simulate flags before resolution.
struct SimulateFlags {
  std::string model = "symmetric";
  std::string universe = "50";
  double theta = 0.1;
  std::optional<int> common;
  std::optional<double> common_frac;
  std::string algorithm = "isac";
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  std::string max_slots = "auto";
  std::string protocol = "aligned";
  std::optional<std::string> expansion;
  std::optional<std::string> receiver_order;
  std::optional<std::string> offset;
  std::string sets = "fresh";
  unsigned threads = 1;
  std::string output = "stdout";
};

void add_protocol_flags(CLI::App& app, std::string& protocol, std::optional<std::string>& expansion,
                        std::optional<std::string>& order, std::optional<std::string>& offset) {
  app.add_option("--protocol", protocol, "Choice distribution preset: aligned|async");
  app.add_option("--expansion", expansion, "Sender expansion rule: random|cyclic");
  app.add_option("--receiver-order", order, "Receiver order: random|listed");
  app.add_option("--offset", offset, "Offset model: zero|joint");
}

Protocol resolve_protocol(const std::string& preset, const std::optional<std::string>& expansion,
                          const std::optional<std::string>& order,
                          const std::optional<std::string>& offset) {
  Protocol p = parse_protocol(preset);
  if (expansion) p.expansion = parse_expansion(*expansion);
  if (order) p.receiver_order = parse_receiver_order(*order);
  if (offset) p.offset = parse_offset_model(*offset);
  return p;
}

void add_simulate_flags(CLI::App& app, SimulateFlags& f) {
  app.add_option("--model", f.model, "symmetric|asymmetric");
  app.add_option("--Q", f.universe, "Universe size: N, list N,M,... or range start:stop:step");
  app.add_option("--theta", f.theta, "Available-channel ratio in (0, 1]");
  auto* g = app.add_option("--G", f.common, "Common channel count");
  auto* gf = app.add_option("--G-frac", f.common_frac, "Common channels as a fraction of theta*Q");
  g->excludes(gf);
  app.add_option("--algorithm", f.algorithm, "isac|random");
  app.add_option("--runs", f.runs, "Runs per configuration");
  app.add_option("--seed", f.seed, "Master seed");
  app.add_option("--max-slots", f.max_slots, "Timeout in slots, or auto");
  add_protocol_flags(app, f.protocol, f.expansion, f.receiver_order, f.offset);
  app.add_option("--sets", f.sets, "fresh|fixed channel sets per run");
  app.add_option("--threads", f.threads, "Worker threads");
}

std::vector<ScenarioConfig> resolve(const SimulateFlags& f) {
  ScenarioConfig base;
  if (f.model == "symmetric") {
    base.model = AvailabilityModel::kSymmetric;
  } else if (f.model == "asymmetric") {
    base.model = AvailabilityModel::kAsymmetric;
  } else {
    throw ConfigError("--model must be symmetric or asymmetric");
  }
  if (f.algorithm == "isac") {
    base.algorithm = Algorithm::kIsac;
  } else if (f.algorithm == "random") {
    base.algorithm = Algorithm::kRandom;
  } else {
    throw ConfigError("--algorithm must be isac or random");
  }
  if (f.sets == "fresh") {
    base.sets = SetPolicy::kFresh;
  } else if (f.sets == "fixed") {
    base.sets = SetPolicy::kFixed;
  } else {
    throw ConfigError("--sets must be fresh or fixed");
  }
  if (!(f.theta > 0.0 && f.theta <= 1.0)) throw ConfigError("--theta must be in (0, 1]");
  if (f.runs < 1) throw ConfigError("--runs must be >= 1");
  if (f.threads < 1) throw ConfigError("--threads must be >= 1");
  if (base.model == AvailabilityModel::kAsymmetric && !f.common && !f.common_frac) {
    throw ConfigError("asymmetric model needs --G or --G-frac");
  }
  base.theta = f.theta;
  base.runs = f.runs;
  base.seed = f.seed;
  base.threads = f.threads;
  base.protocol = resolve_protocol(f.protocol, f.expansion, f.receiver_order, f.offset);

  std::optional<Slot> fixed_slots;
  if (f.max_slots != "auto") {
    fixed_slots = to_int(f.max_slots);
    if (*fixed_slots < 1) throw ConfigError("--max-slots must be >= 1 or auto");
  }

  std::vector<ScenarioConfig> grid;
  for (int q : parse_universe_list(f.universe)) {
    ScenarioConfig c = base;
    c.universe = q;
    c.sender_size = c.receiver_size = theta_to_size(q, f.theta);
    if (f.common) {
      c.common = *f.common;
    } else if (f.common_frac) {
      if (!(*f.common_frac > 0.0 && *f.common_frac <= 1.0)) {
        throw ConfigError("--G-frac must be in (0, 1]");
      }
      c.common = static_cast<int>(std::lround(*f.common_frac * c.sender_size));
    } else {
      c.common = c.sender_size;
    }
    const std::string where = " (Q=" + std::to_string(q) + ", m=n=" +
                              std::to_string(c.sender_size) + ", G=" + std::to_string(c.common) + ")";
    if (c.model == AvailabilityModel::kSymmetric && c.common != c.sender_size) {
      throw ConfigError("symmetric model requires G = m" + where);
    }
    if (c.common < 1) throw ConfigError("G must be >= 1" + where);
    if (c.common > std::min(c.sender_size, c.receiver_size)) {
      throw ConfigError("G must be <= min(m, n)" + where);
    }
    if (c.sender_size + c.receiver_size - c.common > q) {
      throw ConfigError("m + n - G must be <= Q" + where);
    }
    if (fixed_slots) {
      c.max_slots = *fixed_slots;
    } else if (c.algorithm == Algorithm::kIsac) {
      c.max_slots = ttr_bound(c.model, c.sender_size, c.receiver_size, c.common).value;
    } else {
      c.max_slots = kRandomAutoSlots;
    }
    grid.push_back(c);
  }
  return grid;
}

std::vector<const char*> argv_of(const std::string& program, std::span<const std::string> args) {
  std::vector<const char*> argv{program.c_str()};
  for (const auto& a : args) argv.push_back(a.c_str());
  return argv;
}

// Opens --output; nullptr stream means stdout.
struct Sink {
  std::ofstream file;
  std::ostream* stream = nullptr;
};

bool open_sink(const std::string& path, std::ostream& out, Sink& sink) {
  if (path == "stdout" || path == "-") {
    sink.stream = &out;
    return true;
  }
  sink.file.open(path, std::ios::binary);
  sink.stream = &sink.file;
  return static_cast<bool>(sink.file);
}

int run_simulate(const SimulateFlags& flags, std::ostream& out, std::ostream& err) {
  const auto grid = resolve(flags);
  Sink sink;
  if (!open_sink(flags.output, out, sink)) {
    err << "error: cannot open output '" << flags.output << "'\n";
    return kRuntime;
  }
  const int code = run_campaign(grid, *sink.stream, err);
  sink.stream->flush();
  if (!*sink.stream) {
    err << "error: write failed\n";
    return kRuntime;
  }
  return code;
}

struct VerifyFlags {
  std::string sender;
  std::optional<std::string> receiver;
  std::string protocol = "async";
  std::optional<std::string> expansion;
  std::optional<std::string> receiver_order;
  std::optional<std::string> offset;
  std::optional<std::uint64_t> sample_permutations;
  std::uint64_t expansion_limit = 10000;
  std::uint64_t expansion_samples = 2000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output = "stdout";
};

ChannelSet channel_set(std::string_view text) {
  const auto ids = parse_int_list(text);
  return ChannelSet::from_ints(ids);
}

int run_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const ChannelSet sender = channel_set(f.sender);
  const std::optional<ChannelSet> receiver =
      f.receiver ? std::optional(channel_set(*f.receiver)) : std::nullopt;
  VerifyOptions opt;
  opt.protocol = resolve_protocol(f.protocol, f.expansion, f.receiver_order, f.offset);
  opt.expansion_limit = f.expansion_limit;
  opt.expansion_samples = f.expansion_samples;
  opt.seed = f.seed;
  opt.threads = std::max(1u, f.threads);
  if (f.sample_permutations) opt.permutation_samples = *f.sample_permutations;

  const bool symmetric = !receiver || *receiver == sender;
  const ChannelSet& rset = receiver ? *receiver : sender;
  const VerificationReport report = symmetric
                                        ? verify_symmetric(sender, !f.sample_permutations, opt)
                                        : verify_asymmetric(sender, rset, opt);

  Sink sink;
  if (!open_sink(f.output, out, sink)) {
    err << "error: cannot open output '" << f.output << "'\n";
    return kRuntime;
  }
  const auto m = sender.size();
  const auto n = rset.size();
  const auto g = common_count(sender, rset);
  auto& os = *sink.stream;
  os << kCsvHeader << ",violated\n";
  os << fmt::format("{},isac,{},,{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    symmetric ? "symmetric" : "asymmetric",
                    std::max(sender.max_id(), rset.max_id()), m, n, g, report.instances_checked,
                    opt.seed, format_real(report.ttr.mean()), report.worst_ttr,
                    format_real(report.ttr.variance()), report.bound,
                    report.violated ? "false" : "true", report.never_met,
                    report.violated ? "true" : "false");
  os.flush();

  err << fmt::format(
      "verify {} C1={} C2={} protocol={}\n"
      "  instances={} expansions={}{} permutations={}{}\n"
      "  worst_ttr={} bound={} -> {}\n"
      "  witness: k={} extra={} permutation={} offset={}\n",
      symmetric ? "symmetric" : "asymmetric", join(sender.channels()), join(rset.channels()),
      to_string(opt.protocol), report.instances_checked, report.expansions_checked,
      report.expansions_sampled ? " (sampled)" : "", report.permutations_checked,
      report.permutations_sampled ? " (sampled)" : "", report.worst_ttr, report.bound,
      report.violated ? "VIOLATED" : "ok", report.witness.start_index, join(report.witness.extra),
      join(report.witness.permutation), report.witness.offset);
  if (!os) return kRuntime;
  return report.violated ? kViolation : kSuccess;
}

struct SequenceFlags {
  std::string role = "sender";
  std::optional<std::string> channels;
  std::optional<std::string> sender;
  std::optional<std::string> receiver;
  std::optional<int> start_index;
  std::optional<std::string> extra;
  std::optional<std::string> permutation;
  std::string expansion = "random";
  std::string receiver_order = "random";
  Slot offset = 0;
  Slot slots = 12;
  std::uint64_t seed = 0;
};

SenderStrategy make_sender(const ChannelSet& set, const SequenceFlags& f, Rng& rng) {
  SenderStrategy drawn = SenderStrategy::build(set, rng, parse_expansion(f.expansion));
  std::vector<ChannelId> extra(drawn.extra().begin(), drawn.extra().end());
  if (f.extra) {
    extra.clear();
    for (int id : parse_int_list(*f.extra)) extra.push_back(ChannelId{id});
  }
  return SenderStrategy(set, extra, f.start_index.value_or(drawn.start_index()));
}

ReceiverStrategy make_receiver(const ChannelSet& set, const SequenceFlags& f, Rng& rng) {
  if (f.permutation) {
    std::vector<ChannelId> perm;
    for (int id : parse_int_list(*f.permutation)) perm.push_back(ChannelId{id});
    return ReceiverStrategy(set, std::move(perm));
  }
  return ReceiverStrategy::build(set, rng, parse_receiver_order(f.receiver_order));
}

int run_sequence(const SequenceFlags& f, std::ostream& out) {
  if (f.slots < 1) throw ConfigError("--slots must be >= 1");
  if (f.offset < 0) throw ConfigError("--offset must be >= 0");
  Rng rng(f.seed);
  if (f.role == "pair") {
    if (!f.sender || !f.receiver) throw ConfigError("pair role needs --sender and --receiver");
    const auto s = make_sender(channel_set(*f.sender), f, rng);
    const auto r = make_receiver(channel_set(*f.receiver), f, rng);
    out << "slot,sender,receiver,rendezvous\n";
    for (Slot t = 1; t <= f.slots; ++t) {
      const auto a = s.channel_at(t);
      const auto b = r.channel_at(t + f.offset);
      out << t << ',' << a << ',' << b << ',' << (a == b ? 1 : 0) << '\n';
    }
    return kSuccess;
  }
  if (!f.channels) throw ConfigError("--channels is required for role " + f.role);
  const ChannelSet set = channel_set(*f.channels);
  std::vector<ChannelId> seq;
  if (f.role == "sender") {
    seq = tabulate(make_sender(set, f, rng), f.slots);
  } else if (f.role == "receiver") {
    seq = tabulate(make_receiver(set, f, rng), f.slots);
  } else if (f.role == "random") {
    seq = tabulate(RandomStrategy(set, f.seed), f.slots);
  } else {
    throw ConfigError("--role must be sender, receiver, random or pair");
  }
  out << "slot,channel\n";
  for (std::size_t i = 0; i < seq.size(); ++i) out << i + 1 << ',' << seq[i] << '\n';
  return kSuccess;
}

}  // namespace

BatchConfig ScenarioConfig::batch() const {
  BatchConfig b;
  b.model = model;
  b.universe = universe;
  b.sender_size = sender_size;
  b.receiver_size = receiver_size;
  b.common = common;
  b.algorithm = algorithm;
  b.protocol = protocol;
  b.sets = sets;
  b.runs = runs;
  b.seed = seed;
  b.max_slots = max_slots;
  b.threads = threads;
  return b;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) out.push_back(to_int(part));
  return out;
}

std::vector<int> parse_universe_list(std::string_view text) {
  std::vector<int> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be start:stop:step");
    const int start = to_int(parts[0]);
    const int stop = to_int(parts[1]);
    const int step = to_int(parts[2]);
    if (step < 1) throw ConfigError("range step must be >= 1");
    for (int q = start; q <= stop; q += step) out.push_back(q);
  } else {
    out = parse_int_list(text);
  }
  if (out.empty()) throw ConfigError("empty Q list");
  for (int q : out) {
    if (q < 1) throw ConfigError("Q must be >= 1");
  }
  return out;
}

std::string format_real(double x) { return fmt::format("{:.6g}", x); }

std::string csv_row(const ScenarioConfig& c, const BatchResult& r) {
  const bool satisfied = r.censored == 0 && r.stats.max() <= r.bound;
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", model_name(c.model),
                     c.algorithm == Algorithm::kIsac ? "isac" : "random", c.universe,
                     format_real(c.theta), c.sender_size, c.receiver_size, c.common, c.runs,
                     c.seed, format_real(r.stats.mean()), r.stats.max(),
                     format_real(r.stats.variance()), r.bound, satisfied ? "true" : "false",
                     r.censored);
}

int run_campaign(std::span<const ScenarioConfig> grid, std::ostream& out, std::ostream& err) {
  out << kCsvHeader << '\n';
  int code = kSuccess;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const BatchResult r = run_batch(grid[i].batch());
    out << csv_row(grid[i], r) << '\n';
    if (r.violation) {
      const Violation& v = *r.violation;
      err << fmt::format(
          "theorem violation: row {} (Q={}) run {}: no rendezvous within bound {}\n"
          "  C1={} C2={} k={} extra={} permutation={} offset={}\n",
          i + 1, grid[i].universe, v.run, r.bound, join(v.sender_set.channels()),
          join(v.receiver_set.channels()), v.start_index, join(v.extra), join(v.permutation),
          v.offset);
      code = kViolation;
    }
  }
  return code;
}

std::vector<ScenarioConfig> parse_config(std::span<const std::string> args) {
  CLI::App app{"simulate"};
  SimulateFlags flags;
  add_simulate_flags(app, flags);
  const std::string program = "simulate";
  auto argv = argv_of(program, args);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return resolve(flags);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ISAC channel-hopping rendezvous simulator"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo TTR statistics as CSV");
  add_simulate_flags(*simulate, sim);
  simulate->add_option("--output", sim.output, "CSV path or stdout");

  VerifyFlags ver;
  auto* verify = app.add_subcommand("verify", "Exhaustive worst-case TTR against the bound");
  verify->add_option("--sender", ver.sender, "Sender channels, e.g. 1,2")->required();
  verify->add_option("--receiver", ver.receiver, "Receiver channels; omit for symmetric");
  add_protocol_flags(*verify, ver.protocol, ver.expansion, ver.receiver_order, ver.offset);
  verify->add_option("--sample-permutations", ver.sample_permutations,
                     "Sample this many permutations instead of enumerating (symmetric)");
  verify->add_option("--expansion-limit", ver.expansion_limit);
  verify->add_option("--expansion-samples", ver.expansion_samples);
  verify->add_option("--seed", ver.seed, "Seed for sampled choices");
  verify->add_option("--threads", ver.threads);
  verify->add_option("--output", ver.output, "CSV path or stdout");

  SequenceFlags seq;
  auto* sequence = app.add_subcommand("sequence", "Print the first slots of a strategy");
  sequence->add_option("--role", seq.role, "sender|receiver|random|pair");
  sequence->add_option("--channels", seq.channels);
  sequence->add_option("--sender", seq.sender);
  sequence->add_option("--receiver", seq.receiver);
  sequence->add_option("--k", seq.start_index, "Sender start index in [1, m_p]");
  sequence->add_option("--extra", seq.extra, "Sender expansion channels");
  sequence->add_option("--permutation", seq.permutation, "Receiver order");
  sequence->add_option("--expansion", seq.expansion, "Rule when --extra is absent");
  sequence->add_option("--receiver-order", seq.receiver_order, "Rule when --permutation is absent");
  sequence->add_option("--offset", seq.offset, "Receiver head start (pair)");
  sequence->add_option("--slots", seq.slots);
  sequence->add_option("--seed", seq.seed);

  const std::string program = "isac_sim";
  auto argv = argv_of(program, args);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim, out, err);
    if (verify->parsed()) return run_verify(ver, out, err);
    return run_sequence(seq, out);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
}

}  // namespace isac::cli
