// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "crfkit/crfkit.hpp"
#include "json_writer.hpp"
#include "state_file.hpp"

namespace crfkit::cli {

namespace {

struct CommonFlags {
  double tol = kDefaultSeparabilityTol;
  bool json = false;
  bool text = false;
  std::string out_path;
};

struct Loaded {
  PureState state;
  std::string digest;
};

Loaded load(const std::string& path, std::vector<std::string>& warnings) {
  const std::string bytes = read_file(path);
  return {parse_state_file(bytes, warnings), sha256_hex(bytes)};
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("bad party label '" + item + "' in '" + text + "'");
    }
  }
  if (labels.empty()) throw ValidationError("empty party list");
  std::sort(labels.begin(), labels.end());
  return labels;
}

Json labels_json(const std::vector<int>& labels) { return Json(labels); }

Json digits_json(std::size_t flat, int p, int n) { return Json(unpack_index(flat, p, n)); }

Json matrix_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json record_json(const SubsetRecord& r, int local_dim) {
  Json j;
  j["subset"] = labels_json(r.subset.labels());
  j["weights"] = r.weights;
  j["defined_count"] = r.defined.size();
  Json defined = Json::array();
  for (std::size_t idx : r.defined) defined.push_back(digits_json(idx, r.subset.size(), local_dim));
  j["defined"] = std::move(defined);
  j["distances"] = matrix_json(r.dist);
  j["diameter"] = r.diameter;
  j["affine_rank"] = r.affine_rank;
  j["volume"] = r.volume;
  Json angles = Json::array();
  for (const AngleRecord& a : r.angles) {
    Json e;
    e["k"] = digits_json(a.k, r.subset.size(), local_dim);
    e["l"] = digits_json(a.l, r.subset.size(), local_dim);
    e["cos"] = a.cos ? Json(*a.cos) : Json(nullptr);
    angles.push_back(std::move(e));
  }
  j["angles"] = std::move(angles);
  return j;
}

Json volume_pair_json(const Bipartition& bp, const VolumePair& v) {
  Json j;
  j["left"] = labels_json(bp.left.labels());
  j["right"] = labels_json(bp.right.labels());
  j["left_volume"] = v.left_volume;
  j["right_volume"] = v.right_volume;
  return j;
}

Json verdict_json(const SeparabilityVerdict& v) {
  Json j;
  j["left"] = labels_json(v.bipartition.left.labels());
  j["right"] = labels_json(v.bipartition.right.labels());
  j["separable"] = v.separable;
  if (v.diameter) j["diameter"] = *v.diameter;
  if (v.complement_diameter) j["complement_diameter"] = *v.complement_diameter;
  if (v.oracle_second_singular) j["oracle_second_singular"] = *v.oracle_second_singular;
  if (v.agreement) j["agreement"] = *v.agreement;
  return j;
}

Json envelope(const std::string& command, const CommonFlags& flags) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["tolerances"] = Json{{"tol", flags.tol}};
  return j;
}

void finish(Json& report, const std::vector<std::string>& warnings) { report["warnings"] = warnings; }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// --- text summaries -------------------------------------------------------

std::string text_analyze(const Json& r) {
  std::ostringstream os;
  const Json& p = r["payload"];
  os << "analyze: M=" << p["parties"] << " N=" << p["local_dim"] << "\n";
  for (const auto& s : p["subsets"]) {
    os << "  subset " << s["subset"].dump() << ": weights " << s["weights"].dump()
       << ", defined " << s["defined_count"] << ", diameter " << fmt(s["diameter"].get<double>())
       << ", rank " << s["affine_rank"] << ", volume " << fmt(s["volume"].get<double>()) << "\n";
  }
  for (const auto& v : p["volume_pairs"]) {
    os << "  volumes " << v["left"].dump() << "|" << v["right"].dump() << ": ("
       << fmt(v["left_volume"].get<double>()) << ", " << fmt(v["right_volume"].get<double>()) << ")\n";
  }
  return os.str();
}

std::string text_separability(const Json& r) {
  std::ostringstream os;
  const Json& p = r["payload"];
  for (const auto& v : p["bipartitions"]) {
    os << v["left"].dump() << "|" << v["right"].dump() << ": "
       << (v["separable"].get<bool>() ? "separable" : "inseparable") << " (diameter "
       << fmt(v["diameter"].get<double>()) << ")";
    if (v.contains("agreement")) {
      os << ", oracle s2 " << fmt(v["oracle_second_singular"].get<double>())
         << (v["agreement"].get<bool>() ? ", agrees" : ", DISAGREES");
    }
    os << "\n";
  }
  if (p.contains("fully_separable")) {
    os << "fully separable: " << (p["fully_separable"].get<bool>() ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string text_compare(const Json& r) {
  std::ostringstream os;
  const Json& p = r["payload"];
  os << (p["equivalent"].get<bool>() ? "equivalent by motion" : "not equivalent by motion") << "\n";
  for (const auto& v : p["violations"]) {
    os << "  subset " << v["subset"].dump() << ": weight diff " << fmt(v["max_weight_diff"].get<double>())
       << ", distance diff " << fmt(v["max_distance_diff"].get<double>()) << "\n";
  }
  return os.str();
}

std::string text_audit(const Json& r) {
  std::ostringstream os;
  const Json& p = r["payload"];
  os << "audit kind " << p["kind"].get<std::string>() << ": " << p["preserved"] << "/" << p["trials"]
     << " preserved, " << p["motion_equivalent"] << "/" << p["trials"] << " motion-equivalent\n";
  return os.str();
}

// --- commands -------------------------------------------------------------

void emit(const std::string& body, const CommonFlags& flags, std::ostream& out) {
  if (flags.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(flags.out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + flags.out_path + "'");
  f << body;
}

void emit_report(const Json& report, const CommonFlags& flags, std::ostream& out,
                 std::string (*text)(const Json&)) {
  emit(flags.text ? text(report) : dump_json(report), flags, out);
}

int cmd_gen(const std::string& name, int parties, int dim, std::uint64_t seed, const CommonFlags& flags,
            std::ostream& out, std::ostream& err) {
  const PureState state = name == "random" ? random_pure_state(parties, dim, seed) : named_state(name, parties, dim);
  emit(format_state_file(state), flags, out);
  std::ostream& summary = flags.out_path.empty() ? err : out;
  summary << "generated " << name << ": parties=" << state.parties() << " local_dim=" << state.local_dim()
          << " amplitudes=" << state.dimension() << " norm=" << std::setprecision(17)
          << state.amplitudes().norm() << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& subset_text, const CommonFlags& flags,
                std::ostream& out) {
  std::vector<std::string> warnings;
  const Loaded in = load(path, warnings);
  const PureState& s = in.state;
  Json report = envelope("analyze", flags);
  report["input"] = Json{{"sha256", in.digest}};
  Json payload;
  payload["parties"] = s.parties();
  payload["local_dim"] = s.local_dim();
  Json subsets = Json::array();
  Json pairs = Json::array();
  if (subset_text.empty()) {
    const InvariantSignature sig = signature(s);
    for (const auto& r : sig.subsets) subsets.push_back(record_json(r, s.local_dim()));
    for (const auto& v : sig.volume_pairs) pairs.push_back(volume_pair_json(v.bipartition, v.volumes));
  } else {
    const PartySubset subset(parse_labels(subset_text), s.parties());
    const SubsetRecord left = subset_record(s, subset);
    const SubsetRecord right = subset_record(s, subset.complement());
    subsets.push_back(record_json(left, s.local_dim()));
    pairs.push_back(volume_pair_json(Bipartition(subset), {left.volume, right.volume}));
  }
  payload["subsets"] = std::move(subsets);
  payload["volume_pairs"] = std::move(pairs);
  report["payload"] = std::move(payload);
  finish(report, warnings);
  emit_report(report, flags, out, text_analyze);
  return kExitOk;
}

int cmd_separability(const std::string& path, const std::string& partition_text, bool oracle,
                     const CommonFlags& flags, std::ostream& out) {
  std::vector<std::string> warnings;
  const Loaded in = load(path, warnings);
  Json report = envelope("separability", flags);
  report["input"] = Json{{"sha256", in.digest}};
  Json payload;
  Json list = Json::array();
  if (partition_text.empty()) {
    const SeparabilityProfile profile = separability_profile(in.state, flags.tol, oracle);
    for (const auto& v : profile.verdicts) list.push_back(verdict_json(v));
    payload["bipartitions"] = std::move(list);
    payload["fully_separable"] = profile.fully_separable;
  } else {
    const Bipartition bp(PartySubset(parse_labels(partition_text), in.state.parties()));
    SeparabilityVerdict v = is_separable_crf(in.state, bp, flags.tol);
    if (oracle) {
      const SeparabilityVerdict o = svd_oracle(in.state, bp, flags.tol);
      v.oracle_second_singular = o.oracle_second_singular;
      v.agreement = o.separable == v.separable;
    }
    list.push_back(verdict_json(v));
    payload["bipartitions"] = std::move(list);
  }
  payload["oracle"] = oracle;
  report["payload"] = std::move(payload);
  finish(report, warnings);
  emit_report(report, flags, out, text_separability);
  return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const CommonFlags& flags,
                std::ostream& out) {
  std::vector<std::string> warnings;
  const Loaded a = load(path_a, warnings);
  const Loaded b = load(path_b, warnings);
  if (a.state.parties() != b.state.parties() || a.state.local_dim() != b.state.local_dim()) {
    throw ValidationError("states have different shapes (M, N)");
  }
  const MotionComparison cmp = motion_equivalent(a.state, b.state, flags.tol);
  Json report = envelope("compare", flags);
  report["input"] = Json{{"sha256_a", a.digest}, {"sha256_b", b.digest}};
  Json payload;
  payload["equivalent"] = cmp.equivalent;
  payload["violation_count"] = cmp.violation_count;
  payload["max_weight_diff"] = cmp.max_weight_diff;
  payload["max_distance_diff"] = cmp.max_distance_diff;
  Json viol = Json::array();
  for (const auto& v : cmp.violations) {
    Json j;
    j["subset"] = labels_json(v.subset.labels());
    j["max_weight_diff"] = v.discrepancy.max_weight_diff;
    j["max_distance_diff"] = v.discrepancy.max_distance_diff;
    j["definedness_mismatch"] = v.discrepancy.definedness_mismatch;
    viol.push_back(std::move(j));
  }
  payload["violations"] = std::move(viol);
  report["payload"] = std::move(payload);
  finish(report, warnings);
  emit_report(report, flags, out, text_compare);
  return kExitOk;
}

int cmd_audit(const std::string& path, const std::string& kind_text, const std::string& subset_text,
              std::size_t trials, std::uint64_t seed, const CommonFlags& flags, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> warnings;
  const Loaded in = load(path, warnings);
  const LuKind kind = parse_lu_kind(kind_text);
  std::optional<PartySubset> subset;
  if (!subset_text.empty()) subset.emplace(parse_labels(subset_text), in.state.parties());
  if (kind == LuKind::complement && !subset) throw ValidationError("--kind complement requires --subset");
  if (trials < 1) throw ValidationError("--trials must be >= 1");

  const AuditReport rep = audit_lu_invariance(in.state, trials, kind, seed, flags.tol, subset);
  Json report = envelope("audit", flags);
  report["input"] = Json{{"sha256", in.digest}};
  Json payload;
  payload["kind"] = to_string(kind);
  payload["subset"] = rep.subset ? labels_json(rep.subset->labels()) : Json(nullptr);
  payload["seed"] = seed;
  payload["trials"] = rep.trials;
  payload["preserved"] = rep.preserved_count;
  payload["violated"] = rep.violated_count;
  payload["motion_equivalent"] = rep.motion_equivalent_count;
  const bool asserted = kind != LuKind::haar;
  payload["asserted"] = asserted;
  Json rows = Json::array();
  for (const auto& t : rep.per_trial) {
    Json j;
    j["index"] = t.index;
    j["seed"] = t.seed;
    j["motion_equivalent"] = t.motion_equivalent;
    if (t.target_frame_identical) j["target_frame_identical"] = *t.target_frame_identical;
    j["max_weight_diff"] = t.max_weight_diff;
    j["max_distance_diff"] = t.max_distance_diff;
    rows.push_back(std::move(j));
  }
  payload["per_trial"] = std::move(rows);
  report["payload"] = std::move(payload);
  finish(report, warnings);
  emit_report(report, flags, out, text_audit);
  if (asserted && rep.violated_count > 0) {
    err << "audit assertion failed: " << rep.violated_count << " of " << rep.trials
        << " trials did not preserve the frames\n";
    return kExitNumerical;
  }
  return kExitOk;
}

void add_common(CLI::App* sub, CommonFlags& flags, bool with_tol = true) {
  if (with_tol) sub->add_option("--tol", flags.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  auto* j = sub->add_flag("--json", flags.json, "JSON report (default)");
  auto* t = sub->add_flag("--text", flags.text, "Human-readable summary");
  j->excludes(t);
  sub->add_option("--out", flags.out_path, "Output path (default stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex rigid frame analysis of multipartite pure states", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonFlags flags;

  std::string gen_name;
  int gen_parties = 3;
  int gen_dim = 2;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a named or random state file");
  gen->add_option("name", gen_name, "random | ghz | w | product | zero | a-bell | qutrit-bac-separable")
      ->required();
  gen->add_option("--parties", gen_parties, "Number of parties M")->check(CLI::Range(1, 64));
  gen->add_option("--dim", gen_dim, "Local dimension N")->check(CLI::Range(2, 1 << 20));
  gen->add_option("--seed", seed, "Seed for random states");
  add_common(gen, flags, false);

  std::string file_a;
  std::string file_b;
  std::string subset_text;
  auto* analyze = app.add_subcommand("analyze", "Frame weights, distances, volumes and angles");
  analyze->add_option("state-file", file_a)->required();
  analyze->add_option("--subset", subset_text, "Comma-separated 1-based party labels");
  add_common(analyze, flags);

  std::string partition_text;
  bool oracle = false;
  auto* sep = app.add_subcommand("separability", "Bipartite separability verdicts");
  sep->add_option("state-file", file_a)->required();
  sep->add_option("--partition", partition_text, "Left side as comma-separated party labels");
  sep->add_flag("--oracle", oracle, "Also run the singular-value oracle");
  add_common(sep, flags);

  auto* compare = app.add_subcommand("compare", "Motion-equivalence of two states");
  compare->add_option("file-a", file_a)->required();
  compare->add_option("file-b", file_b)->required();
  add_common(compare, flags);

  std::string kind_text = "haar";
  std::size_t trials = 10;
  auto* audit = app.add_subcommand("audit", "Audit frame preservation under random local unitaries");
  audit->add_option("state-file", file_a)->required();
  audit->add_option("--kind", kind_text, "haar | phase | complement");
  audit->add_option("--subset", subset_text, "Fixed parties for --kind complement");
  audit->add_option("--trials", trials, "Number of trials");
  audit->add_option("--seed", seed, "Base seed");
  add_common(audit, flags);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*gen) return cmd_gen(gen_name, gen_parties, gen_dim, seed, flags, out, err);
    if (*analyze) return cmd_analyze(file_a, subset_text, flags, out);
    if (*sep) return cmd_separability(file_a, partition_text, oracle, flags, out);
    if (*compare) return cmd_compare(file_a, file_b, flags, out);
    if (*audit) return cmd_audit(file_a, kind_text, subset_text, trials, seed, flags, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UndefinedVertexError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace crfkit::cli
