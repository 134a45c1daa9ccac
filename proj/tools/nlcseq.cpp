// nlcseq — analysis, generation and exact counting of binary sequences by
// nonlinear (maximum-order) complexity.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 resource-limit
// error, 4 verification failure or conjecture discovery. Data goes to
// stdout, diagnostics to stderr; --json wraps every result in one envelope
// object.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlc/bigint.hpp"
#include "nlc/bitseq.hpp"
#include "nlc/complexity.hpp"
#include "nlc/config.hpp"
#include "nlc/enumeration.hpp"
#include "nlc/errors.hpp"
#include "nlc/oracle.hpp"
#include "nlc/representative.hpp"
#include "nlc/structgen.hpp"

namespace {

using nlc::BigInt;
using nlc::BitSeq;
using nlc::Fraction;
using nlc::PeriodSeq;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

constexpr int kProbabilityDigits = 12;

json fraction_json(const Fraction& f) {
  return json{{"fraction", f.to_string()}, {"decimal", f.decimal(kProbabilityDigits)}};
}

json record_json(const nlc::ClassRecord& rec) {
  return json{{"n", rec.n}, {"c", rec.c}, {"d", rec.d},
              {"q", rec.q}, {"r", rec.r}, {"add", rec.add}};
}

std::string record_text(const nlc::ClassRecord& rec) {
  return "c=" + std::to_string(rec.c) + " d=" + std::to_string(rec.d) +
         " q=" + std::to_string(rec.q) + " r=" + std::to_string(rec.r) +
         " add=" + std::to_string(rec.add);
}

json breakdown_json(const nlc::CountBreakdown& bd) {
  json case_i = json::array();
  for (const auto& term : bd.case_i_terms) {
    case_i.push_back(json{{"d", term.d}, {"count", term.value.to_string()}});
  }
  json case_ii = json::array();
  for (const auto& term : bd.case_ii_terms) {
    case_ii.push_back(json{{"d", term.d}, {"t", term.t}, {"count", term.value.to_string()}});
  }
  return json{{"n", bd.n},
              {"omega", bd.omega},
              {"case_i", std::move(case_i)},
              {"case_i_subtotal", bd.case_i_subtotal.to_string()},
              {"case_ii", std::move(case_ii)},
              {"total", bd.total.to_string()},
              {"probability", fraction_json(bd.probability)}};
}

json rep_report_json(const nlc::RepReport& report) {
  json members = json::array();
  for (const auto& m : report.members) {
    members.push_back(json{{"offset", m.offset}, {"record", record_json(m.rec)}});
  }
  json reps = json::array();
  for (const auto& m : report.representatives) reps.push_back(m.offset);
  return json{{"base", report.base.to_string()},
              {"c", report.c},
              {"members", std::move(members)},
              {"representative_offsets", std::move(reps)},
              {"unique", report.unique}};
}

// Collected result of one subcommand run.
struct Outcome {
  json result;        // envelope payload
  std::string text;   // plain-mode output (may be empty)
  int exit_code = kExitOk;
};

Fraction row_probability(long long n, std::uint64_t classes) {
  return Fraction::make(BigInt(n) * BigInt(static_cast<long long>(classes)),
                        nlc::aperiodic_count(n));
}

std::string family_line(const char* tag, const BitSeq& word) {
  std::string line = std::string(tag) + "=" + word.to_string();
  for (const auto& rec : nlc::classify(word)) line += " " + record_text(rec);
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary-sequence nonlinear complexity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand too
  bool json_mode = false;
  app.add_flag("--json", json_mode, "wrap the result in a JSON envelope");

  std::string bits_arg;
  long long n_arg = 0;
  long long omega_arg = 0;
  int c_arg = -1;
  int max_arg = 0;
  long long limit_arg = -1;
  std::string format_arg = "lines";

  auto* nlc_cmd = app.add_subcommand("nlc", "complexity of a finite or periodic sequence");
  nlc_cmd->require_subcommand(1);
  auto* nlc_finite_cmd = nlc_cmd->add_subcommand("finite", "complexity of the word itself");
  nlc_finite_cmd->add_option("bits", bits_arg, "0/1 word")->required();
  auto* nlc_periodic_cmd =
      nlc_cmd->add_subcommand("periodic", "complexity of the infinite extension (exhaustive)");
  nlc_periodic_cmd->add_option("bits", bits_arg, "period as 0/1 word")->required();
  auto* nlc_fast_cmd =
      nlc_cmd->add_subcommand("fast", "complexity of the infinite extension (additive shortcut)");
  nlc_fast_cmd->add_option("bits", bits_arg, "period as 0/1 word")->required();

  auto* classify_cmd = app.add_subcommand("classify", "membership records of a word");
  classify_cmd->add_option("bits", bits_arg, "0/1 word")->required();

  auto* tight_cmd = app.add_subcommand("tight-bound", "representative threshold c0");
  tight_cmd->add_option("n", n_arg, "period length")->required();

  auto* rep_cmd = app.add_subcommand("representative", "rotation class at one complexity level");
  rep_cmd->add_option("bits", bits_arg, "0/1 word")->required();
  rep_cmd->add_option("--c", c_arg, "complexity level")->required();

  auto* family_cmd = app.add_subcommand("family", "tightness witness family at even length n");
  family_cmd->add_option("n", n_arg, "period length")->required();

  auto* scan_cmd = app.add_subcommand("conjecture-scan",
                                      "search for offset/spacing conjecture violations");
  scan_cmd->add_option("--max", max_arg, "largest length to scan")->required();

  auto* count_cmd = app.add_subcommand("count", "exact class count at one complexity");
  count_cmd->add_option("n", n_arg, "period length")->required();
  count_cmd->add_option("omega", omega_arg, "complexity")->required();

  auto* table_cmd = app.add_subcommand("count-table", "class counts over the whole formula range");
  table_cmd->add_option("n", n_arg, "period length")->required();

  auto* generate_cmd = app.add_subcommand("generate", "emit one period per class");
  generate_cmd->add_option("n", n_arg, "period length")->required();
  generate_cmd->add_option("omega", omega_arg, "complexity")->required();
  generate_cmd->add_option("--limit", limit_arg, "stop after this many periods");
  generate_cmd->add_option("--format", format_arg, "lines|json")
      ->check(CLI::IsMember({"lines", "json"}));

  auto* dist_cmd = app.add_subcommand("distribution", "exhaustive complexity distribution");
  dist_cmd->add_option("n", n_arg, "period length")->required();

  auto* verify_cmd = app.add_subcommand("verify", "cross-check the formulas against the oracle");
  verify_cmd->require_subcommand(1);
  auto* verify_counts_cmd = verify_cmd->add_subcommand("counts", "formula vs exhaustive counts");
  verify_counts_cmd->add_option("n", n_arg, "period length")->required();
  auto* verify_structure_cmd =
      verify_cmd->add_subcommand("structure", "generated classes vs exhaustive classes");
  verify_structure_cmd->add_option("n", n_arg, "period length")->required();
  verify_structure_cmd->add_option("omega", omega_arg, "complexity")->required();
  auto* verify_properties_cmd = verify_cmd->add_subcommand("properties", "exhaustive law suite");
  verify_properties_cmd->add_option("n", n_arg, "period length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command;
  json inputs = json::object();
  Outcome out;

  try {
    if (nlc_finite_cmd->parsed() || nlc_periodic_cmd->parsed() || nlc_fast_cmd->parsed()) {
      inputs["bits"] = bits_arg;
      const BitSeq word = nlc::parse_bits(bits_arg);
      int value = 0;
      if (nlc_finite_cmd->parsed()) {
        command = "nlc finite";
        value = nlc::nlc_finite(word);
      } else if (nlc_periodic_cmd->parsed()) {
        command = "nlc periodic";
        value = nlc::nlc_periodic_oracle(PeriodSeq::from_word(word));
      } else {
        command = "nlc fast";
        value = nlc::nlc_periodic_fast(PeriodSeq::from_word(word));
      }
      out.result = json{{"nlc", value}};
      out.text = std::to_string(value) + "\n";
    } else if (classify_cmd->parsed()) {
      command = "classify";
      inputs["bits"] = bits_arg;
      const auto records = nlc::classify(nlc::parse_bits(bits_arg));
      json arr = json::array();
      for (const auto& rec : records) {
        arr.push_back(record_json(rec));
        out.text += record_text(rec) + "\n";
      }
      out.result = json{{"records", std::move(arr)}};
    } else if (tight_cmd->parsed()) {
      command = "tight-bound";
      inputs["n"] = n_arg;
      if (n_arg > INT32_MAX) throw std::domain_error("tight-bound: n too large");
      const auto bound = nlc::tight_bound_c0(static_cast<int>(n_arg));
      out.result = json{{"c0", bound.c0}, {"tight", bound.tight}};
      out.text = "c0=" + std::to_string(bound.c0) +
                 " tight=" + (bound.tight ? "true" : "false") + "\n";
    } else if (rep_cmd->parsed()) {
      command = "representative";
      inputs["bits"] = bits_arg;
      inputs["c"] = c_arg;
      const auto report = nlc::shift_class(nlc::parse_bits(bits_arg), c_arg);
      out.result = rep_report_json(report);
      for (const auto& m : report.members) {
        bool is_rep = false;
        for (const auto& r : report.representatives) is_rep = is_rep || r.offset == m.offset;
        out.text += "k=" + std::to_string(m.offset) + " " + record_text(m.rec) +
                    " representative=" + (is_rep ? "true" : "false") + "\n";
      }
      out.text += std::string("unique=") + (report.unique ? "true" : "false") + "\n";
    } else if (family_cmd->parsed()) {
      command = "family";
      inputs["n"] = n_arg;
      if (n_arg > 1000000) throw std::domain_error("family: n too large");
      const auto fam = nlc::family_counterexample(static_cast<int>(n_arg));
      auto entry = [](const BitSeq& word) {
        json recs = json::array();
        for (const auto& rec : nlc::classify(word)) recs.push_back(record_json(rec));
        return json{{"bits", word.to_string()}, {"records", std::move(recs)}};
      };
      out.result = json{{"s", entry(fam.s)}, {"u", entry(fam.u)}, {"v", entry(fam.v)}};
      out.text = family_line("s", fam.s) + "\n" + family_line("u", fam.u) + "\n" +
                 family_line("v", fam.v) + "\n";
    } else if (scan_cmd->parsed()) {
      command = "conjecture-scan";
      inputs["max"] = max_arg;
      const auto hits = nlc::conjecture_scan(max_arg);
      json arr = json::array();
      for (const auto& hit : hits) {
        arr.push_back(json{{"n", hit.n},
                           {"s", hit.s.to_string()},
                           {"offset", hit.offset},
                           {"d2", hit.d2},
                           {"add_base", hit.add_base},
                           {"add_shifted", hit.add_shifted}});
        out.text += "n=" + std::to_string(hit.n) + " s=" + hit.s.to_string() +
                    " offset=" + std::to_string(hit.offset) + " d2=" + std::to_string(hit.d2) +
                    " add_base=" + std::to_string(hit.add_base) +
                    " add_shifted=" + std::to_string(hit.add_shifted) + "\n";
      }
      out.result = json{{"hits", std::move(arr)}, {"discovery", !hits.empty()}};
      if (!hits.empty()) {
        std::cerr << "conjecture-scan: DISCOVERY — " << hits.size()
                  << " certificate(s) emitted\n";
        out.exit_code = kExitVerification;
      }
    } else if (count_cmd->parsed()) {
      command = "count";
      inputs["n"] = n_arg;
      inputs["omega"] = omega_arg;
      const auto bd = nlc::count_P(n_arg, omega_arg);
      out.result = breakdown_json(bd);
      out.text = out.result.dump(2) + "\n";
    } else if (table_cmd->parsed()) {
      command = "count-table";
      inputs["n"] = n_arg;
      json rows = json::array();
      out.text = "# omega\tcount\tprobability\tprobability_decimal\n";
      for (long long omega = 3 * n_arg / 4; omega <= n_arg - 1; ++omega) {
        const auto bd = nlc::count_P(n_arg, omega);
        rows.push_back(json{{"omega", omega},
                            {"count", bd.total.to_string()},
                            {"probability", fraction_json(bd.probability)}});
        out.text += std::to_string(omega) + "\t" + bd.total.to_string() + "\t" +
                    bd.probability.to_string() + "\t" +
                    bd.probability.decimal(kProbabilityDigits) + "\n";
      }
      out.result = json{{"rows", std::move(rows)}};
    } else if (generate_cmd->parsed()) {
      command = "generate";
      inputs["n"] = n_arg;
      inputs["omega"] = omega_arg;
      if (limit_arg >= 0) inputs["limit"] = limit_arg;
      inputs["format"] = format_arg;
      if (n_arg > nlc::exhaustive_limit() && limit_arg < 0) {
        throw nlc::ResourceLimitError(
            "generate: unbounded stream above the exhaustive limit; pass --limit");
      }
      json arr = json::array();
      long long emitted = 0;
      nlc::generate_P(static_cast<int>(n_arg), static_cast<int>(omega_arg),
                      [&](const BitSeq& s) {
                        if (limit_arg >= 0 && emitted >= limit_arg) return false;
                        ++emitted;
                        if (format_arg == "json" || json_mode) arr.push_back(s.to_string());
                        if (format_arg == "lines") out.text += s.to_string() + "\n";
                        return true;
                      });
      if (format_arg == "json") out.text = arr.dump(2) + "\n";
      out.result = json{{"periods", std::move(arr)}, {"count", emitted}};
    } else if (dist_cmd->parsed()) {
      command = "distribution";
      inputs["n"] = n_arg;
      if (n_arg > INT32_MAX) throw std::domain_error("distribution: n too large");
      const auto table = nlc::brute_distribution(static_cast<int>(n_arg));
      json rows = json::array();
      out.text = "# omega\tclasses\tsequences\tprobability\tprobability_decimal\n";
      for (const auto& [omega, classes] : table.rows) {
        const Fraction prob = row_probability(table.n, classes);
        rows.push_back(json{{"omega", omega},
                            {"classes", classes},
                            {"sequences", classes * static_cast<std::uint64_t>(table.n)},
                            {"probability", fraction_json(prob)}});
        out.text += std::to_string(omega) + "\t" + std::to_string(classes) + "\t" +
                    std::to_string(classes * static_cast<std::uint64_t>(table.n)) + "\t" +
                    prob.to_string() + "\t" + prob.decimal(kProbabilityDigits) + "\n";
      }
      out.result = json{{"n", table.n}, {"rows", std::move(rows)}};
    } else if (verify_counts_cmd->parsed()) {
      command = "verify counts";
      inputs["n"] = n_arg;
      const auto report = nlc::verify_counts(static_cast<int>(n_arg));
      json rows = json::array();
      for (const auto& row : report.checked) {
        rows.push_back(json{{"omega", row.omega},
                            {"formula", row.formula.to_string()},
                            {"oracle", row.oracle},
                            {"pass", row.pass}});
        out.text += std::string(row.pass ? "PASS" : "FAIL") + " omega=" +
                    std::to_string(row.omega) + " formula=" + row.formula.to_string() +
                    " oracle=" + std::to_string(row.oracle) + "\n";
      }
      json unverified = json::array();
      for (const auto& [omega, classes] : report.unverified) {
        unverified.push_back(json{{"omega", omega}, {"oracle", classes}});
        out.text += "UNVERIFIED omega=" + std::to_string(omega) +
                    " oracle=" + std::to_string(classes) + "\n";
      }
      out.result = json{{"n", report.n},
                        {"pass", report.pass},
                        {"checked", std::move(rows)},
                        {"unverified", std::move(unverified)}};
      if (!report.pass) out.exit_code = kExitVerification;
    } else if (verify_structure_cmd->parsed()) {
      command = "verify structure";
      inputs["n"] = n_arg;
      inputs["omega"] = omega_arg;
      const auto report =
          nlc::verify_structure(static_cast<int>(n_arg), static_cast<int>(omega_arg));
      out.result = json{{"n", report.n},         {"omega", report.omega},
                        {"pass", report.pass},   {"generated", report.generated},
                        {"expected", report.expected}, {"missing", report.missing},
                        {"extra", report.extra}};
      out.text = std::string(report.pass ? "PASS" : "FAIL") + " generated=" +
                 std::to_string(report.generated) + " expected=" +
                 std::to_string(report.expected) + "\n";
      for (const auto& w : report.missing) out.text += "MISSING " + w + "\n";
      for (const auto& w : report.extra) out.text += "EXTRA " + w + "\n";
      if (!report.pass) out.exit_code = kExitVerification;
    } else if (verify_properties_cmd->parsed()) {
      command = "verify properties";
      inputs["n"] = n_arg;
      const auto report = nlc::verify_properties(static_cast<int>(n_arg));
      json rows = json::array();
      for (const auto& res : report.results) {
        rows.push_back(json{{"name", res.name},
                            {"pass", res.pass},
                            {"cases", res.cases},
                            {"counterexample", res.counterexample},
                            {"note", res.note}});
        out.text += std::string(res.pass ? "PASS" : "FAIL") + " " + res.name + " (cases=" +
                    std::to_string(res.cases) + ")";
        if (!res.pass) out.text += " counterexample: " + res.counterexample;
        if (!res.note.empty()) out.text += " [" + res.note + "]";
        out.text += "\n";
      }
      out.result = json{{"n", report.n}, {"pass", report.pass}, {"results", std::move(rows)}};
      if (!report.pass) out.exit_code = kExitVerification;
    }
  } catch (const nlc::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json_mode) {
      json envelope{{"command", command}, {"inputs", inputs}, {"result", nullptr},
                    {"status", "error"}, {"error", e.what()}};
      std::cout << envelope.dump(2) << "\n";
    }
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json_mode) {
      json envelope{{"command", command}, {"inputs", inputs}, {"result", nullptr},
                    {"status", "error"}, {"error", e.what()}};
      std::cout << envelope.dump(2) << "\n";
    }
    return kExitDomain;
  }

  if (json_mode) {
    json envelope{{"command", command}, {"inputs", inputs}, {"result", out.result},
                  {"status", "ok"}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
