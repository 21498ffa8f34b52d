// Copyright 2026 The cjwe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cjwe/cjwe.hpp"

namespace cjwe::cli {

namespace {

namespace fs = std::filesystem;

// Restores process-wide settings when a run finishes.
class SettingsGuard {
 public:
  SettingsGuard() : limits_(limits()), threads_(threads()) {}
  ~SettingsGuard() {
    set_limits(limits_);
    set_threads(threads_);
  }
  SettingsGuard(const SettingsGuard&) = delete;
  SettingsGuard& operator=(const SettingsGuard&) = delete;

 private:
  Limits limits_;
  unsigned threads_;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("invalid value '" + text + "' for " + what);
  }
  return v;
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return parse_u64(v, name);
}

std::vector<Code> load_codes(const std::vector<std::string>& paths) {
  std::vector<Code> codes;
  codes.reserve(paths.size());
  for (const auto& p : paths) codes.push_back(read_code_file(p));
  return codes;
}

Duality left_flag(const std::string& dual) { return dual == "left" || dual == "both" ? Duality::Dual : Duality::Same; }
Duality right_flag(const std::string& dual) {
  return dual == "right" || dual == "both" ? Duality::Dual : Duality::Same;
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << content;
    if (!f) throw Error("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct Options {
  std::string threads;
  std::string max_codewords;
  std::string max_permutations;

  std::vector<std::string> files;
  bool brute_force = false;
  bool gfold = false;
  bool avg = false;
  bool empirical = false;
  std::string dual = "none";
  std::string type;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t moment = 1;
  std::string out_dir;
};

void apply_settings(const Options& o) {
  Limits l = limits();
  if (auto v = env_u64("CJWE_MAX_CODEWORDS")) l.max_codewords = *v;
  if (auto v = env_u64("CJWE_MAX_PERMUTATIONS")) l.max_permutations = *v;
  std::optional<std::uint64_t> t = env_u64("CJWE_THREADS");
  if (!o.max_codewords.empty()) l.max_codewords = parse_u64(o.max_codewords, "--max-codewords");
  if (!o.max_permutations.empty()) l.max_permutations = parse_u64(o.max_permutations, "--max-permutations");
  if (!o.threads.empty()) t = parse_u64(o.threads, "--threads");
  if (t) {
    if (*t == 0 || *t > 1024) throw ParseError("thread count must be in [1, 1024]");
    set_threads(static_cast<unsigned>(*t));
  }
  set_limits(l);
}

std::string cmd_enum(const Options& o) {
  const SelfDualType t = parse_self_dual_type(o.type);
  const SelfDualFamily fam = enumerate_selfdual(t, o.n);
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);

  nlohmann::ordered_json manifest;
  manifest["type"] = to_string(t);
  manifest["n"] = o.n;
  manifest["ring"] = ring_for(t).literal();
  manifest["inner"] = inner_for(t) == InnerProduct::Hermitian ? "hermitian" : "euclidean";
  manifest["count"] = fam.codes.size();
  if (t == SelfDualType::III || t == SelfDualType::IV) manifest["mass"] = mass(t, o.n).get_str();
  auto list = nlohmann::ordered_json::array();
  const int width = std::max<int>(4, static_cast<int>(std::to_string(fam.codes.size()).size()));
  for (std::size_t i = 0; i < fam.codes.size(); ++i) {
    std::string idx = std::to_string(i + 1);
    idx.insert(0, static_cast<std::size_t>(width) - std::min<std::size_t>(width, idx.size()), '0');
    const std::string name = "type" + to_string(t) + "_n" + std::to_string(o.n) + "_" + idx + ".code";
    write_atomically(dir / name, format_code(fam.codes[i]));
    nlohmann::ordered_json entry;
    entry["file"] = name;
    entry["class"] = to_string(classify(fam.codes[i]));
    entry["size"] = fam.codes[i].size().get_str();
    list.push_back(std::move(entry));
  }
  manifest["codes"] = std::move(list);
  const std::string text = manifest.dump(2) + "\n";
  write_atomically(dir / "manifest.json", text);
  return text;
}

std::string cmd_mw(const Options& o) {
  const auto codes = load_codes(o.files);
  if (o.dual != "none" && o.dual != "left" && o.dual != "right" && o.dual != "both") {
    throw ParseError("--dual must be none, left, right or both");
  }
  if (codes.size() == 1) {
    if (o.avg) throw PreconditionError("--avg needs two codes");
    if (o.dual == "right") throw PreconditionError("--dual right needs two codes");
    const Code& c = codes[0];
    Enumerator p = cwe(c);
    if (o.dual == "none") return p.to_json();
    return mw_cwe(p, c.size(), transform_matrix(c.ring(), c.inner_product())).to_json();
  }
  if (codes.size() != 2) throw PreconditionError("mw takes one or two code files");
  const Code &a = codes[0], &b = codes[1];
  const Enumerator p = o.avg ? avg_cjwe(a, b) : cjwe(a, b);
  const CycMatrix ta = transform_matrix(a.ring(), a.inner_product());
  const CycMatrix tb = transform_matrix(b.ring(), b.inner_product());
  const Enumerator r = o.avg ? mw_avg_joint(p, left_flag(o.dual), right_flag(o.dual), a.size(), b.size(), ta, tb)
                             : mw_joint(p, left_flag(o.dual), right_flag(o.dual), a.size(), b.size(), ta, tb);
  return r.to_json();
}

std::string cmd_delta_j(const Options& o) {
  const Code c = read_code_file(o.files.at(0));
  const SelfDualType t = parse_self_dual_type(o.type);
  if (o.moment != 1 && o.moment != 2) throw PreconditionError("--moment must be 1 or 2");
  if (!(c.ring() == ring_for(t)) || c.inner_product() != inner_for(t)) {
    throw PreconditionError("code is not over the alphabet and inner product of Type " + to_string(t));
  }
  if (!has_type(c, class_for(t))) throw PreconditionError("code is not of Type " + to_string(t));
  const auto n = static_cast<std::uint32_t>(c.length());
  if (o.empirical) return to_string(delta_empirical(c, enumerate_selfdual(t, n), o.moment));
  return to_string(delta_closed(t, n, o.moment));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  SettingsGuard guard;
  Options o;
  CLI::App app{"Exact complete and joint weight enumerators of linear codes", "cjwe"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads (env CJWE_THREADS)");
  app.add_option("--max-codewords", o.max_codewords, "Codeword budget (env CJWE_MAX_CODEWORDS)");
  app.add_option("--max-permutations", o.max_permutations, "Permutation budget (env CJWE_MAX_PERMUTATIONS)");

  auto* c_cwe = app.add_subcommand("cwe", "Complete weight enumerator of a code");
  c_cwe->add_option("file", o.files)->required()->expected(1);
  auto* c_cjwe = app.add_subcommand("cjwe", "Complete joint weight enumerator of two codes");
  c_cjwe->add_option("files", o.files)->required()->expected(2);
  auto* c_gfold = app.add_subcommand("gfold", "g-fold joint weight enumerator");
  c_gfold->add_option("files", o.files)->required()->expected(1, 16);
  auto* c_avg = app.add_subcommand("avg", "Average joint enumerator over permutations of the first code");
  c_avg->add_option("files", o.files)->required()->expected(1, 16);
  c_avg->add_flag("--brute-force", o.brute_force, "Sum over all n! permutations");
  c_avg->add_flag("--gfold", o.gfold, "Accept any number of codes (g-fold average)");
  auto* c_mw = app.add_subcommand("mw", "MacWilliams transform");
  c_mw->add_option("files", o.files)->required()->expected(1, 2);
  c_mw->add_option("--dual", o.dual, "none|left|right|both")
      ->check(CLI::IsMember({"none", "left", "right", "both"}));
  c_mw->add_flag("--avg", o.avg, "Transform the average joint enumerator");
  auto* c_delta = app.add_subcommand("delta", "Average intersection number of two codes");
  c_delta->add_option("files", o.files)->required()->expected(2);
  c_delta->add_flag("--brute-force", o.brute_force, "Sum over all n! permutations");
  auto* c_mass = app.add_subcommand("mass", "Number of self-dual codes of a type");
  c_mass->add_option("--type", o.type)->required();
  c_mass->add_option("--n", o.n)->required();
  auto* c_contains = app.add_subcommand("contains", "Self-dual codes containing a k-dimensional self-orthogonal code");
  c_contains->add_option("--type", o.type)->required();
  c_contains->add_option("--n", o.n)->required();
  c_contains->add_option("--k", o.k)->required();
  auto* c_deltaj = app.add_subcommand("deltaJ", "Average intersection moment against a self-dual family");
  c_deltaj->add_option("file", o.files)->required()->expected(1);
  c_deltaj->add_option("--type", o.type)->required();
  c_deltaj->add_option("--moment", o.moment)->required();
  c_deltaj->add_flag("--empirical", o.empirical, "Average over the enumerated family");
  auto* c_enum = app.add_subcommand("enum", "Enumerate a self-dual family into a directory");
  c_enum->add_option("--type", o.type)->required();
  c_enum->add_option("--n", o.n)->required();
  c_enum->add_option("--out", o.out_dir)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cjwe: " << e.what() << "\n";
    return kParseError;
  }

  try {
    apply_settings(o);
    std::string result;
    if (c_cwe->parsed()) {
      result = cwe(read_code_file(o.files[0])).to_json();
    } else if (c_cjwe->parsed()) {
      const auto codes = load_codes(o.files);
      result = cjwe(codes[0], codes[1]).to_json();
    } else if (c_gfold->parsed()) {
      result = gfold_cjwe(load_codes(o.files)).to_json();
    } else if (c_avg->parsed()) {
      const auto codes = load_codes(o.files);
      if (!o.gfold && codes.size() != 2) throw PreconditionError("avg takes two codes; use --gfold for other counts");
      result = o.brute_force ? avg_cjwe_bruteforce(codes).to_json() : avg_gfold(codes).to_json();
    } else if (c_mw->parsed()) {
      result = cmd_mw(o);
    } else if (c_delta->parsed()) {
      const auto codes = load_codes(o.files);
      result = to_string(o.brute_force ? avg_intersection_bruteforce(codes[0], codes[1])
                                       : avg_intersection(codes[0], codes[1]));
    } else if (c_mass->parsed()) {
      result = mass(parse_self_dual_type(o.type), o.n).get_str();
    } else if (c_contains->parsed()) {
      result = count_containing(parse_self_dual_type(o.type), o.n, o.k).get_str();
    } else if (c_deltaj->parsed()) {
      result = cmd_delta_j(o);
    } else if (c_enum->parsed()) {
      result = cmd_enum(o);
    }
    if (!result.empty() && result.back() != '\n') result.push_back('\n');
    out << result << std::flush;
    return kOk;
  } catch (const ParseError& e) {
    err << "cjwe: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "cjwe: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const PreconditionError& e) {
    err << "cjwe: precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const fs::filesystem_error& e) {
    err << "cjwe: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "cjwe: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace cjwe::cli
