#include "catalysis/cli.hpp"

#include "catalysis/closed_form.hpp"
#include "catalysis/core_math.hpp"
#include "catalysis/errors.hpp"
#include "catalysis/oracle.hpp"
#include "catalysis/region_search.hpp"
#include "catalysis/sweep_k2.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace catalysis::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

json fractions(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

std::string joined(std::span<const Rational> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += to_display_string(values[i]);
  }
  return "(" + s + ")";
}

std::string signature_text(const SignVector& sig) {
  std::string s;
  s.reserve(sig.size());
  for (auto v : sig) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

std::pair<SchmidtVector, SchmidtVector> load_pair(const ProblemInput& input) {
  if (input.psi1.empty() || input.psi2.empty()) {
    throw CatalysisError(ErrorKind::Parse, "both psi1 and psi2 must be given");
  }
  return pad_to_common_length(normalize_and_sort(std::span<const std::string>(input.psi1)),
                              normalize_and_sort(std::span<const std::string>(input.psi2)));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_prefix_table(std::ostream& out, const std::string& left_name, std::span<const Rational> left,
                        const std::string& right_name, std::span<const Rational> right) {
  const auto pa = prefix_sums(left);
  const auto pb = prefix_sums(right);
  out << "  l  " << std::setw(14) << left_name << "  " << std::setw(14) << right_name << "\n";
  for (std::size_t l = 0; l < pa.size(); ++l) {
    out << std::setw(3) << l + 1 << "  " << std::setw(14) << to_display_string(pa[l]) << "  " << std::setw(14)
        << to_display_string(pb[l]) << (pa[l] <= pb[l] ? "" : "   <- exceeds") << "\n";
  }
}

// Converts thrown errors into the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const CatalysisError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

std::vector<std::string> read_string_array(const json& doc, const char* key) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw CatalysisError(ErrorKind::Parse, std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out.push_back(v.dump());
    } else {
      throw CatalysisError(ErrorKind::Parse, std::string(key) +
                                                 " entries must be strings such as \"0.4\" or \"2/5\" to stay exact");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> split_list(std::string_view comma_list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    const auto comma = comma_list.find(',', start);
    const auto end = comma == std::string_view::npos ? comma_list.size() : comma;
    std::string_view item = comma_list.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      const auto last = item.find_last_not_of(" \t");
      out.emplace_back(item.substr(first, last - first + 1));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ProblemInput merge_input_document(std::string_view json_text, ProblemInput base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalysisError(ErrorKind::Parse, std::string("input document: ") + e.what());
  }
  if (!doc.is_object()) throw CatalysisError(ErrorKind::Parse, "input document must be a JSON object");
  if (doc.contains("psi1")) base.psi1 = read_string_array(doc, "psi1");
  if (doc.contains("psi2")) base.psi2 = read_string_array(doc, "psi2");
  if (doc.contains("phi")) base.phi = read_string_array(doc, "phi");
  if (doc.contains("k")) {
    if (!doc["k"].is_number_unsigned()) throw CatalysisError(ErrorKind::Parse, "k must be a positive integer");
    base.k = doc["k"].get<std::size_t>();
  }
  if (doc.contains("grid_denominator")) {
    if (!doc["grid_denominator"].is_number_unsigned()) {
      throw CatalysisError(ErrorKind::Parse, "grid_denominator must be a positive integer");
    }
    base.grid_denominator = doc["grid_denominator"].get<std::size_t>();
  }
  return base;
}

ProblemInput merge_input_file(const std::string& path, ProblemInput base) {
  std::ifstream in(path);
  if (!in) throw CatalysisError(ErrorKind::Parse, "cannot open input file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return merge_input_document(buf.str(), std::move(base));
}

int cmd_compare(const ProblemInput& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [psi1, psi2] = load_pair(input);
    const ComparisonVerdict verdict = compare(psi1, psi2);
    if (input.format == OutputFormat::Machine) {
      json doc;
      doc["command"] = "compare";
      doc["verdict"] = to_string(verdict);
      doc["psi1"] = fractions(psi1.entries());
      doc["psi2"] = fractions(psi2.entries());
      doc["prefix_sums"] = {{"psi1", fractions(prefix_sums(psi1))}, {"psi2", fractions(prefix_sums(psi2))}};
      out << doc.dump() << "\n";
    } else {
      out << "psi1 = " << joined(psi1.entries()) << "\n";
      out << "psi2 = " << joined(psi2.entries()) << "\n";
      print_prefix_table(out, "psi1", psi1.entries(), "psi2", psi2.entries());
      out << "verdict: " << to_string(verdict) << "\n";
    }
    return kExitPositive;
  });
}

int cmd_find(const ProblemInput& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const auto [psi1, psi2] = load_pair(input);
    const std::size_t k = input.k;
    if (k < 2 || k > kMaxCatalystDimension) {
      throw CatalysisError(ErrorKind::UnsupportedK, "k = " + std::to_string(k) + " outside [2, " +
                                                        std::to_string(kMaxCatalystDimension) + "]");
    }
    const std::size_t n = psi1.size();

    json doc;
    doc["command"] = "find";
    doc["k"] = k;
    doc["psi1"] = fractions(psi1.entries());
    doc["psi2"] = fractions(psi2.entries());
    json witnesses = json::array();
    json stats = json::object();
    std::string method;
    CatalystVerdict verdict = CatalystVerdict::NotExists;
    std::vector<std::string> human_witnesses;

    const ComparisonVerdict relation = compare(psi1, psi2);
    if (relation == ComparisonVerdict::ForwardTransformable) {
      verdict = CatalystVerdict::AlreadyTransformable;
      method = "majorization";
    } else if (relation == ComparisonVerdict::Equivalent) {
      verdict = CatalystVerdict::Equivalent;
      method = "majorization";
    } else if (relation == ComparisonVerdict::BackwardTransformable) {
      verdict = CatalystVerdict::ReverseOnly;
      method = "majorization";
    } else if (k == 2) {
      const SweepResult sweep = sweep_k2(psi1, psi2);
      method = "breakpoint-sweep";
      if (n == 4) {
        method = "closed-form+breakpoint-sweep";
        const auto closed = catalyst_interval_4x4(psi1, psi2);
        const bool agree = closed ? (sweep.feasible.intervals.size() == 1 && sweep.feasible.intervals[0] == *closed)
                                  : sweep.feasible.empty();
        if (!agree) throw CatalysisError(ErrorKind::Internal, "closed form and breakpoint sweep disagree");
      }
      for (const auto& iv : sweep.feasible.intervals) {
        witnesses.push_back({{"interval", {{"lo", to_fraction_string(iv.lo)}, {"hi", to_fraction_string(iv.hi)}}}});
        human_witnesses.push_back("c in [" + to_display_string(iv.lo) + ", " + to_display_string(iv.hi) + "]  (~[" +
                                  to_decimal_string(iv.lo) + ", " + to_decimal_string(iv.hi) + "])");
      }
      verdict = sweep.feasible.empty() ? CatalystVerdict::NotExists : CatalystVerdict::Exists;
      stats["breakpoints"] = sweep.breakpoint_count;
      stats["systems_solved"] = sweep.gaps_solved;
    } else {
      const CatalystResult r = find_catalysts(psi1, psi2, k);
      method = "region-search";
      verdict = r.verdict;
      for (const auto& w : r.witnesses) {
        witnesses.push_back({{"cell_signature", signature_text(w.cell_signature)},
                             {"point", fractions(w.catalyst.entries())},
                             {"lower_dimensional", w.lower_dimensional}});
        human_witnesses.push_back("phi = " + joined(w.catalyst.entries()) +
                                  (w.lower_dimensional ? "  [last coefficient zero]" : ""));
      }
      stats["hyperplanes"] = r.stats.hyperplanes;
      stats["cells"] = r.stats.cells_enumerated;
      stats["systems_solved"] = r.stats.systems_solved;
      stats["lower_dimensional_witnesses"] = r.stats.lower_dimensional_witnesses;
    }
    const double ms = elapsed_ms(start);

    doc["verdict"] = to_string(verdict);
    doc["method"] = method;
    doc["witnesses"] = witnesses;
    doc["stats"] = stats;
    if (input.stats) doc["timing_ms"] = ms;

    if (input.format == OutputFormat::Machine) {
      out << doc.dump() << "\n";
    } else {
      out << "psi1 = " << joined(psi1.entries()) << "\n";
      out << "psi2 = " << joined(psi2.entries()) << "\n";
      out << "k = " << k << ", method: " << method << "\n";
      out << "verdict: " << to_string(verdict) << "\n";
      for (const auto& w : human_witnesses) out << "  " << w << "\n";
      if (input.stats) {
        for (const auto& [key, value] : stats.items()) out << "  " << key << ": " << value.dump() << "\n";
        out << "  timing_ms: " << ms << "\n";
      }
    }
    switch (verdict) {
      case CatalystVerdict::Exists:
      case CatalystVerdict::AlreadyTransformable:
      case CatalystVerdict::Equivalent:
        return kExitPositive;
      case CatalystVerdict::NotExists:
      case CatalystVerdict::ReverseOnly:
        return kExitNegative;
    }
    return kExitError;
  });
}

int cmd_verify(const ProblemInput& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [psi1, psi2] = load_pair(input);
    if (!input.phi || input.phi->empty()) throw CatalysisError(ErrorKind::Parse, "verify needs --phi");
    std::vector<Rational> raw;
    for (const auto& s : *input.phi) raw.push_back(parse_rational(s));
    // Order is irrelevant for the product multiset; normalization is not applied.
    std::sort(raw.begin(), raw.end(), std::greater<>());
    const CatalystCandidate phi(std::move(raw));

    const ProductSpectrum sa = tensor_spectrum(psi1, phi);
    const ProductSpectrum sb = tensor_spectrum(psi2, phi);
    const bool ok = is_majorized(sa.values, sb.values, Padding::Strict);
    if (input.format == OutputFormat::Machine) {
      json doc;
      doc["command"] = "verify";
      doc["psi1"] = fractions(psi1.entries());
      doc["psi2"] = fractions(psi2.entries());
      doc["phi"] = fractions(phi.entries());
      doc["spectrum_psi1"] = fractions(sa.values);
      doc["spectrum_psi2"] = fractions(sb.values);
      doc["prefix_sums"] = {{"psi1", fractions(prefix_sums(sa.values))}, {"psi2", fractions(prefix_sums(sb.values))}};
      doc["verdict"] = ok;
      out << doc.dump() << "\n";
    } else {
      out << "phi = " << joined(phi.entries()) << "\n";
      out << "psi1 (x) phi = " << joined(sa.values) << "\n";
      out << "psi2 (x) phi = " << joined(sb.values) << "\n";
      print_prefix_table(out, "psi1 (x) phi", sa.values, "psi2 (x) phi", sb.values);
      out << "verdict: " << (ok ? "true (catalyst)" : "false (not a catalyst)") << "\n";
    }
    return ok ? kExitPositive : kExitNegative;
  });
}

int cmd_oracle(const ProblemInput& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [psi1, psi2] = load_pair(input);
    if (input.grid_denominator < 1) throw CatalysisError(ErrorKind::Parse, "grid denominator must be >= 1");
    if (input.k < 1) throw CatalysisError(ErrorKind::Parse, "k must be >= 1");
    const GridSpec spec{input.k, input.grid_denominator};
    const auto hit = grid_search(psi1, psi2, spec);
    if (input.format == OutputFormat::Machine) {
      json doc;
      doc["command"] = "oracle";
      doc["k"] = spec.k;
      doc["grid_denominator"] = spec.denominator;
      doc["psi1"] = fractions(psi1.entries());
      doc["psi2"] = fractions(psi2.entries());
      doc["witness"] = hit ? fractions(hit->entries()) : json(nullptr);
      out << doc.dump() << "\n";
    } else if (hit) {
      out << "grid witness: phi = " << joined(hit->entries()) << "\n";
    } else {
      out << "no grid witness at resolution 1/" << spec.denominator << "\n";
    }
    return hit ? kExitPositive : kExitNegative;
  });
}

}  // namespace catalysis::cli
