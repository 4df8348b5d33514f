// SPDX-License-Identifier: Apache-2.0
//
// dupread: codes correcting tandem duplications in composition read vectors.
//
// Exit codes: 0 success, 1 verification or decoding failure, 2 usage error,
// 3 enumeration size guard exceeded.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dupread/json_io.hpp"
#include "dupread/nucleus_code.hpp"
#include "dupread/rates.hpp"
#include "dupread/render.hpp"
#include "dupread/sidon_code.hpp"
#include "dupread/verify.hpp"

namespace {

using namespace dupread;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

std::vector<int> parse_int_list(const std::string& text) {
  // comma-separated values; "a..b" expands to the inclusive range
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty list item");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range " + item);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

Sequence parse_sequence(const std::string& text, int q) {
  Sequence x;
  for (int v : parse_int_list(text)) {
    if (v < 0 || v >= q) {
      throw std::invalid_argument("symbol " + std::to_string(v) +
                                  " outside alphabet of size " + std::to_string(q));
    }
    x.push_back(v);
  }
  return x;
}

std::vector<DuplicationEvent> parse_events(const std::vector<std::string>& specs,
                                           int default_len) {
  std::vector<DuplicationEvent> events;
  for (const auto& s : specs) {
    const auto values = parse_int_list(s);
    if (values.size() == 1 && default_len > 0) {
      events.push_back({static_cast<std::size_t>(values[0]),
                        static_cast<std::size_t>(default_len)});
    } else if (values.size() == 2) {
      events.push_back({static_cast<std::size_t>(values[0]),
                        static_cast<std::size_t>(values[1])});
    } else {
      throw std::invalid_argument("event must be pos,len: " + s);
    }
  }
  return events;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct SidonOptions {
  std::string file;
  long long m_start = 2;
};

SidonSet obtain_sidon(const SidonOptions& opt, long long n, int ell, int t) {
  if (!opt.file.empty()) {
    auto b = sidon_from_json(load_json_file(opt.file));
    if (b.order < t || b.elements.size() < static_cast<std::size_t>(n + ell)) {
      throw std::invalid_argument(
          "sidon set too small for these parameters (need " +
          std::to_string(n + ell) + " elements of order " + std::to_string(t) + ")");
    }
    return b;
  }
  return greedy_sidon(static_cast<std::size_t>(n + ell), t, opt.m_start);
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  const auto results = run_suite(suite, seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
              << "\n";
    all = all && r.pass;
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "codes correcting tandem duplications in sliding-window composition "
      "read vectors"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // ---- read ----------------------------------------------------------
  auto* read_cmd = app.add_subcommand(
      "read", "composition read vector of a sequence");
  struct {
    int q = 4;
    int ell = 2;
    std::string x;
    std::vector<std::string> dup;
    std::string format = "text";
    std::string out;
  } read_opt;
  read_cmd->add_option("--q", read_opt.q, "alphabet size");
  read_cmd->add_option("--ell", read_opt.ell, "window length");
  read_cmd->add_option("--x", read_opt.x, "sequence, comma separated")->required();
  read_cmd->add_option("--dup", read_opt.dup,
                       "duplication event pos,len applied after reading (repeatable)");
  read_cmd->add_option("--format", read_opt.format)->check(CLI::IsMember({"text", "json"}));
  read_cmd->add_option("--out", read_opt.out, "output file (default stdout)");
  read_cmd->callback([&] {
    const auto x = parse_sequence(read_opt.x, read_opt.q);
    EntryVector z = read_vector(x, read_opt.q, read_opt.ell);
    for (const auto& ev : parse_events(read_opt.dup, 0)) {
      z = duplicate(z, ev);
    }
    if (read_opt.format == "json") {
      emit(entry_vector_to_json(z).dump() + "\n", read_opt.out);
    } else {
      emit(render_entry_vector(z) + "\n", read_opt.out);
    }
  });

  // ---- derive --------------------------------------------------------
  auto* derive_cmd = app.add_subcommand(
      "derive", "k-step derivative of the read vector, with its zero-run split");
  struct {
    int q = 4;
    int ell = 2;
    int k = 3;
    std::string x;
    std::vector<std::string> dup;
    std::string format = "text";
    std::string out;
  } derive_opt;
  derive_cmd->add_option("--q", derive_opt.q, "alphabet size");
  derive_cmd->add_option("--ell", derive_opt.ell, "window length");
  derive_cmd->add_option("--k", derive_opt.k, "derivative step / duplication length");
  derive_cmd->add_option("--x", derive_opt.x, "sequence, comma separated")->required();
  derive_cmd->add_option("--dup", derive_opt.dup,
                         "duplication event pos,len applied before deriving (repeatable)");
  derive_cmd->add_option("--format", derive_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  derive_cmd->add_option("--out", derive_opt.out, "output file (default stdout)");
  derive_cmd->callback([&] {
    const auto x = parse_sequence(derive_opt.x, derive_opt.q);
    EntryVector z = read_vector(x, derive_opt.q, derive_opt.ell);
    for (const auto& ev : parse_events(derive_opt.dup, derive_opt.k)) {
      z = duplicate(z, ev);
    }
    const auto d = delta_k(z, derive_opt.k);
    const auto dec = decompose(d, derive_opt.k);
    if (derive_opt.format == "json") {
      nlohmann::json j{{"derivative", entry_vector_to_json(d)},
                       {"mu", entry_vector_to_json(dec.mu)},
                       {"sigma", dec.sigma}};
      emit(j.dump() + "\n", derive_opt.out);
    } else {
      std::string text = render_entry_vector(d) + "\n";
      text += "mu = " + render_entry_vector(dec.mu) + "\n";
      text += "sigma = " + render_int_vector(dec.sigma) + "\n";
      emit(text, derive_opt.out);
    }
  });

  // ---- nucleus -------------------------------------------------------
  auto* nucleus_cmd = app.add_subcommand(
      "nucleus", "duplication-invariant part and depth of a sequence");
  struct {
    int q = 4;
    int ell = 2;
    int k = 3;
    std::string x;
    std::string format = "text";
    std::string out;
  } nucleus_opt;
  nucleus_cmd->add_option("--q", nucleus_opt.q, "alphabet size");
  nucleus_cmd->add_option("--ell", nucleus_opt.ell, "window length");
  nucleus_cmd->add_option("--k", nucleus_opt.k, "duplication length");
  nucleus_cmd->add_option("--x", nucleus_opt.x, "sequence, comma separated")->required();
  nucleus_cmd->add_option("--format", nucleus_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  nucleus_cmd->add_option("--out", nucleus_opt.out, "output file (default stdout)");
  nucleus_cmd->callback([&] {
    const auto x = parse_sequence(nucleus_opt.x, nucleus_opt.q);
    const auto dec = decompose(
        delta_k(read_vector(x, nucleus_opt.q, nucleus_opt.ell), nucleus_opt.k),
        nucleus_opt.k);
    int d = 0;
    for (int s : dec.sigma) d += s;
    if (nucleus_opt.format == "json") {
      nlohmann::json j{{"nucleus", entry_vector_to_json(dec.mu)},
                       {"sigma", dec.sigma},
                       {"depth", d}};
      emit(j.dump() + "\n", nucleus_opt.out);
    } else {
      std::string text = "nucleus = " + render_entry_vector(dec.mu) + "\n";
      text += "sigma = " + render_int_vector(dec.sigma) + "\n";
      text += "depth = " + std::to_string(d) + "\n";
      emit(text, nucleus_opt.out);
    }
  });

  // ---- enumerate -----------------------------------------------------
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "build the one-per-class code and its depth partition");
  struct {
    int q = 2;
    int ell = 2;
    int k = 2;
    long long n = 5;
    std::string format = "csv";
    std::string out;
    std::uint64_t guard = default_size_guard();
  } enum_opt;
  enum_cmd->add_option("--q", enum_opt.q, "alphabet size");
  enum_cmd->add_option("--ell", enum_opt.ell, "window length");
  enum_cmd->add_option("--k", enum_opt.k, "duplication length");
  enum_cmd->add_option("--n", enum_opt.n, "sequence length");
  enum_cmd->add_option("--format", enum_opt.format)
      ->check(CLI::IsMember({"csv", "json"}));
  enum_cmd->add_option("--out", enum_opt.out, "output file (default stdout)");
  enum_cmd->add_option("--size-guard", enum_opt.guard, "enumeration state budget");
  enum_cmd->callback([&] {
    Params p{enum_opt.q, enum_opt.ell, enum_opt.k, enum_opt.n, std::nullopt};
    const auto code = build_nucleus_code(p, enum_opt.guard);
    const auto parts = depth_partition(code);
    if (enum_opt.format == "json") {
      nlohmann::json j{{"q", p.q},
                       {"ell", p.ell},
                       {"k", p.k},
                       {"n", p.n},
                       {"total_classes", code.representatives.size()}};
      j["depths"] = nlohmann::json::array();
      for (const auto& [d, c] : parts) {
        j["depths"].push_back({{"depth", d}, {"count", c}});
      }
      if (p.n <= 16) {
        j["representatives"] = nlohmann::json::array();
        for (const auto& rep : code.representatives) {
          j["representatives"].push_back(sequence_to_json(rep));
        }
      }
      emit(j.dump() + "\n", enum_opt.out);
    } else {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"n", "q", "k", "ell", "total_classes", "depth", "count"});
      for (const auto& [d, c] : parts) {
        rows.push_back({std::to_string(p.n), std::to_string(p.q),
                        std::to_string(p.k), std::to_string(p.ell),
                        std::to_string(code.representatives.size()),
                        std::to_string(d), std::to_string(c)});
      }
      emit(csv_emit(rows), enum_opt.out);
    }
  });

  // ---- fine-count ----------------------------------------------------
  auto* fine_cmd = app.add_subcommand(
      "fine-count", "count sequences free of k-periodic windows");
  struct {
    int q = 2;
    int ell = 2;
    int k = 2;
    long long n = 5;
    bool brute = false;
    std::string out;
    std::uint64_t guard = default_size_guard();
  } fine_opt;
  fine_cmd->add_option("--q", fine_opt.q, "alphabet size");
  fine_cmd->add_option("--ell", fine_opt.ell, "window length");
  fine_cmd->add_option("--k", fine_opt.k, "duplication length");
  fine_cmd->add_option("--n", fine_opt.n, "sequence length");
  fine_cmd->add_flag("--brute", fine_opt.brute, "cross-check by exhaustive scan");
  fine_cmd->add_option("--out", fine_opt.out, "output file (default stdout)");
  fine_cmd->add_option("--size-guard", fine_opt.guard, "scan budget for --brute");
  fine_cmd->callback([&] {
    const BigInt fast = count_fine_fast(fine_opt.q, fine_opt.k, fine_opt.ell, fine_opt.n);
    // the plain length-n run-limited count, for reference alongside the
    // exact value (the two growth rates agree; the counts do not)
    const BigInt reference = rll_count(fine_opt.q, fine_opt.k + fine_opt.ell - 2, fine_opt.n);
    std::vector<std::string> header{"q", "k", "ell", "n", "fine_count", "rll_reference"};
    std::vector<std::string> row{
        std::to_string(fine_opt.q),    std::to_string(fine_opt.k),
        std::to_string(fine_opt.ell),  std::to_string(fine_opt.n),
        fast.str(),                    reference.str()};
    if (fine_opt.brute) {
      header.push_back("fine_brute");
      row.push_back(std::to_string(count_fine_bruteforce(
          fine_opt.q, fine_opt.k, fine_opt.ell, static_cast<int>(fine_opt.n),
          fine_opt.guard)));
    }
    emit(csv_emit({header, row}), fine_opt.out);
  });

  // ---- sidon ---------------------------------------------------------
  auto* sidon_cmd = app.add_subcommand(
      "sidon", "construct and verify an order-t distinct-sums set");
  struct {
    std::size_t r = 8;
    int t = 2;
    long long m_start = 2;
    std::string out;
  } sidon_opt;
  sidon_cmd->add_option("--r", sidon_opt.r, "number of elements")->required();
  sidon_cmd->add_option("--t", sidon_opt.t, "order (error budget)")->required();
  sidon_cmd->add_option("--m-start", sidon_opt.m_start, "initial modulus");
  sidon_cmd->add_option("--out", sidon_opt.out, "write the set as JSON");
  sidon_cmd->callback([&] {
    const auto b = greedy_sidon(sidon_opt.r, sidon_opt.t, sidon_opt.m_start);
    const auto j = sidon_to_json(b);
    if (!sidon_opt.out.empty()) write_json_file(sidon_opt.out, j);
    std::cout << j.dump() << "\n";
  });

  // ---- encode --------------------------------------------------------
  auto* encode_cmd = app.add_subcommand(
      "encode", "enumerate a syndrome coset of the bounded-error code");
  struct {
    int q = 2;
    int ell = 2;
    int k = 2;
    long long n = 4;
    int t = 1;
    long long g = -1;
    SidonOptions sidon;
    std::string out;
    std::uint64_t guard = default_size_guard();
  } encode_opt;
  encode_cmd->add_option("--q", encode_opt.q, "alphabet size");
  encode_cmd->add_option("--ell", encode_opt.ell, "window length");
  encode_cmd->add_option("--k", encode_opt.k, "duplication length");
  encode_cmd->add_option("--n", encode_opt.n, "sequence length");
  encode_cmd->add_option("--t", encode_opt.t, "error budget")->required();
  encode_cmd->add_option("--g", encode_opt.g,
                         "coset label (default: the most populous coset)");
  encode_cmd->add_option("--sidon-file", encode_opt.sidon.file,
                         "JSON set to use instead of the greedy construction");
  encode_cmd->add_option("--m-start", encode_opt.sidon.m_start, "initial modulus");
  encode_cmd->add_option("--out", encode_opt.out, "output file (default stdout)");
  encode_cmd->add_option("--size-guard", encode_opt.guard, "enumeration budget");
  encode_cmd->callback([&] {
    Params p{encode_opt.q, encode_opt.ell, encode_opt.k, encode_opt.n, encode_opt.t};
    p.validate();
    const auto b = obtain_sidon(encode_opt.sidon, p.n, p.ell, encode_opt.t);
    long long g = encode_opt.g;
    if (g < 0) g = best_coset(p, b, encode_opt.guard).first;
    const auto members = coset_members(p, b, g, encode_opt.guard);
    nlohmann::json j{{"q", p.q},     {"ell", p.ell}, {"k", p.k},
                     {"n", p.n},     {"t", encode_opt.t},
                     {"sidon", sidon_to_json(b)},
                     {"g", g},       {"size", members.size()}};
    j["codewords"] = nlohmann::json::array();
    for (const auto& x : members) j["codewords"].push_back(sequence_to_json(x));
    emit(j.dump() + "\n", encode_opt.out);
  });

  // ---- decode --------------------------------------------------------
  auto* decode_cmd = app.add_subcommand(
      "decode", "recover the sent sequence from a received vector");
  struct {
    int q = 2;
    int ell = 2;
    int k = 2;
    long long n = 4;
    int t = 1;
    long long g = 0;
    std::string sidon_file;
    std::string input;
    std::string out;
  } decode_opt;
  decode_cmd->add_option("--q", decode_opt.q, "alphabet size");
  decode_cmd->add_option("--ell", decode_opt.ell, "window length");
  decode_cmd->add_option("--k", decode_opt.k, "duplication length");
  decode_cmd->add_option("--n", decode_opt.n, "sequence length");
  decode_cmd->add_option("--t", decode_opt.t, "error budget")->required();
  decode_cmd->add_option("--g", decode_opt.g, "coset label")->required();
  decode_cmd->add_option("--sidon-file", decode_opt.sidon_file, "JSON set file")
      ->required();
  decode_cmd->add_option("--input", decode_opt.input,
                         "received vector as a JSON array of compositions")
      ->required();
  decode_cmd->add_option("--out", decode_opt.out, "output file (default stdout)");
  decode_cmd->callback([&] {
    Params p{decode_opt.q, decode_opt.ell, decode_opt.k, decode_opt.n, decode_opt.t};
    p.validate();
    SidonOptions so;
    so.file = decode_opt.sidon_file;
    const auto b = obtain_sidon(so, p.n, p.ell, decode_opt.t);
    const auto received =
        entry_vector_from_json(load_json_file(decode_opt.input), p.q);
    const SidonCode code{p, b, decode_opt.g};
    const SyndromeTable table(b);
    const auto outcome = decode(received, code, table);
    nlohmann::json j{{"status", to_string(outcome.status)}};
    if (outcome.status == DecodeStatus::ok) {
      j["x"] = sequence_to_json(outcome.x);
    } else {
      exit_code = kExitFailure;
    }
    emit(j.dump() + "\n", decode_opt.out);
  });

  // ---- simulate ------------------------------------------------------
  auto* sim_cmd = app.add_subcommand(
      "simulate", "channel round trips over a coset: duplicate, decode, tally");
  struct {
    int q = 2;
    int ell = 2;
    int k = 2;
    long long n = 4;
    int t = 1;
    long long g = -1;
    int trials = 100;
    std::uint64_t seed = 0;
    SidonOptions sidon;
    std::string out;
    std::uint64_t guard = default_size_guard();
  } sim_opt;
  sim_cmd->add_option("--q", sim_opt.q, "alphabet size");
  sim_cmd->add_option("--ell", sim_opt.ell, "window length");
  sim_cmd->add_option("--k", sim_opt.k, "duplication length");
  sim_cmd->add_option("--n", sim_opt.n, "sequence length");
  sim_cmd->add_option("--t", sim_opt.t, "error budget")->required();
  sim_cmd->add_option("--g", sim_opt.g, "coset label (default: most populous)");
  sim_cmd->add_option("--trials", sim_opt.trials, "number of trials");
  sim_cmd->add_option("--seed", sim_opt.seed, "random seed");
  sim_cmd->add_option("--sidon-file", sim_opt.sidon.file, "JSON set file");
  sim_cmd->add_option("--m-start", sim_opt.sidon.m_start, "initial modulus");
  sim_cmd->add_option("--out", sim_opt.out, "output file (default stdout)");
  sim_cmd->add_option("--size-guard", sim_opt.guard, "enumeration budget");
  sim_cmd->callback([&] {
    Params p{sim_opt.q, sim_opt.ell, sim_opt.k, sim_opt.n, sim_opt.t};
    p.validate();
    const auto b = obtain_sidon(sim_opt.sidon, p.n, p.ell, sim_opt.t);
    long long g = sim_opt.g;
    if (g < 0) g = best_coset(p, b, sim_opt.guard).first;
    const auto members = coset_members(p, b, g, sim_opt.guard);
    if (members.empty()) throw std::runtime_error("coset is empty");
    const SidonCode code{p, b, g};
    const SyndromeTable table(b);
    std::mt19937_64 rng(sim_opt.seed);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"trial", "errors", "success"});
    std::uint64_t good = 0;
    for (int trial = 0; trial < sim_opt.trials; ++trial) {
      const auto& x = members[rng() % members.size()];
      const int errors = static_cast<int>(rng() % (static_cast<std::uint64_t>(sim_opt.t) + 1));
      const auto draw =
          random_duplications(read_vector(x, p.q, p.ell), p.k, errors, rng());
      const auto outcome = decode(draw.output, code, table);
      const bool success = outcome.status == DecodeStatus::ok && outcome.x == x;
      good += success;
      rows.push_back({std::to_string(trial), std::to_string(errors),
                      success ? "1" : "0"});
    }
    char rate[32];
    std::snprintf(rate, sizeof(rate), "%.6f",
                  sim_opt.trials ? static_cast<double>(good) / sim_opt.trials : 1.0);
    rows.push_back({"summary", "", rate});
    emit(csv_emit(rows), sim_opt.out);
    if (good != static_cast<std::uint64_t>(sim_opt.trials)) exit_code = kExitFailure;
  });

  // ---- rates ---------------------------------------------------------
  auto* rates_cmd = app.add_subcommand(
      "rates", "asymptotic-rate table for the unbounded regime");
  struct {
    int q = 4;
    std::string ells = "5,9";
    std::string ks = "1..9";
    std::string format = "csv";
    std::string out;
  } rates_opt;
  rates_cmd->add_option("--q", rates_opt.q, "alphabet size");
  rates_cmd->add_option("--ell", rates_opt.ells, "window lengths, e.g. 5,9");
  rates_cmd->add_option("--k", rates_opt.ks, "duplication lengths, e.g. 1..9");
  rates_cmd->add_option("--format", rates_opt.format)
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  rates_cmd->add_option("--out", rates_opt.out, "output file (default stdout)");
  rates_cmd->callback([&] {
    const auto rows =
        rate_table(parse_int_list(rates_opt.ks), parse_int_list(rates_opt.ells),
                   rates_opt.q);
    if (rates_opt.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row{{"k", r.k},           {"ell", r.ell},
                           {"q", r.q},           {"lower", r.lower},
                           {"upper", r.upper},   {"method_lower", r.method_lower},
                           {"method_upper", r.method_upper}};
        if (r.exact) row["exact"] = *r.exact;
        j.push_back(std::move(row));
      }
      emit(j.dump() + "\n", rates_opt.out);
    } else if (rates_opt.format == "markdown") {
      std::string text = "| k | ell | lower | upper |\n|---|-----|-------|-------|\n";
      for (const auto& r : rows) {
        const std::string lo = r.exact ? "=" + format_rate(*r.exact) : format_rate(r.lower);
        const std::string hi = r.exact ? "=" + format_rate(*r.exact) : format_rate(r.upper);
        text += "| " + std::to_string(r.k) + " | " + std::to_string(r.ell) +
                " | " + lo + " | " + hi + " |\n";
      }
      emit(text, rates_opt.out);
    } else {
      std::vector<std::vector<std::string>> csv;
      csv.push_back({"k", "ell", "q", "lower", "upper", "exact", "method_lower",
                     "method_upper"});
      for (const auto& r : rows) {
        csv.push_back({std::to_string(r.k), std::to_string(r.ell),
                       std::to_string(r.q), format_rate(r.lower),
                       format_rate(r.upper), r.exact ? format_rate(*r.exact) : "",
                       r.method_lower, r.method_upper});
      }
      emit(csv_emit(csv), rates_opt.out);
    }
  });

  // ---- verify --------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a named invariant suite (nonzero exit on failure)");
  struct {
    std::string suite;
    std::uint64_t seed = 20240915;
  } verify_opt;
  verify_cmd
      ->add_option("suite", verify_opt.suite,
                   "one of: lemma2 lemma3 lemma4 lemma6 lemma7 eq-commute "
                   "thm7 table2 decoder all")
      ->required();
  verify_cmd->add_option("--seed", verify_opt.seed, "seed for randomized checks");
  verify_cmd->callback([&] {
    exit_code = run_verify(verify_opt.suite, verify_opt.seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const size_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return exit_code;
}
