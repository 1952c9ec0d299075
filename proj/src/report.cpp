/* Copyright 2026 The oreindex Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "oreindex/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "oreindex/engstrom.hpp"
#include "oreindex/errors.hpp"
#include "oreindex/fq.hpp"
#include "oreindex/ore.hpp"
#include "oreindex/quadrinomial.hpp"

namespace oreindex {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const FactorEntry& v) {
  j = json{{"phi", v.phi}, {"multiplicity", v.multiplicity}};
}
void from_json(const json& j, FactorEntry& v) {
  j.at("phi").get_to(v.phi);
  j.at("multiplicity").get_to(v.multiplicity);
}

void to_json(json& j, const EdgeEntry& v) {
  j = json{{"l", v.l},         {"e", v.e},
           {"length", v.length}, {"start", v.start},
           {"end", v.end},     {"residual", v.residual},
           {"residual_factors", v.residual_factors}};
}
void from_json(const json& j, EdgeEntry& v) {
  j.at("l").get_to(v.l);
  j.at("e").get_to(v.e);
  j.at("length").get_to(v.length);
  j.at("start").get_to(v.start);
  j.at("end").get_to(v.end);
  j.at("residual").get_to(v.residual);
  j.at("residual_factors").get_to(v.residual_factors);
}

void to_json(json& j, const PolygonEntry& v) {
  j = json{{"phi", v.phi},
           {"lift_adjusted", v.lift_adjusted},
           {"vertices", v.vertices},
           {"edges", v.edges}};
}
void from_json(const json& j, PolygonEntry& v) {
  j.at("phi").get_to(v.phi);
  v.lift_adjusted = j.value("lift_adjusted", false);
  j.at("vertices").get_to(v.vertices);
  j.at("edges").get_to(v.edges);
}

void to_json(json& j, const IndexEntry& v) {
  j = json{{"status", v.status}};
  if (v.value) j["value"] = *v.value;
  if (!v.reason.empty()) j["reason"] = v.reason;
}
void from_json(const json& j, IndexEntry& v) {
  j.at("status").get_to(v.status);
  v.value.reset();
  if (j.contains("value")) v.value = j.at("value").get<int>();
  v.reason = j.value("reason", std::string());
}

void to_json(json& j, const PrimeReport& v) {
  j = json{{"p", v.p},
           {"factors", v.factors},
           {"polygons", v.polygons},
           {"regular", v.regular},
           {"splitting", v.splitting},
           {"provenance", v.provenance},
           {"index", v.index}};
  if (!v.error_kind.empty()) j["error"] = json{{"kind", v.error_kind}, {"message", v.error}};
}
void from_json(const json& j, PrimeReport& v) {
  j.at("p").get_to(v.p);
  j.at("factors").get_to(v.factors);
  j.at("polygons").get_to(v.polygons);
  v.regular = j.value("regular", true);
  j.at("splitting").get_to(v.splitting);
  v.provenance = j.value("provenance", std::vector<std::string>{});
  j.at("index").get_to(v.index);
  v.error_kind.clear();
  v.error.clear();
  if (j.contains("error")) {
    j.at("error").at("kind").get_to(v.error_kind);
    j.at("error").at("message").get_to(v.error);
  }
}

void to_json(json& j, const VerdictEntry& v) {
  j = json{{"theorem", v.theorem},
           {"applies", v.applies},
           {"claimed", v.claimed},
           {"failed_conditions", v.failed_conditions}};
}
void from_json(const json& j, VerdictEntry& v) {
  j.at("theorem").get_to(v.theorem);
  j.at("applies").get_to(v.applies);
  j.at("claimed").get_to(v.claimed);
  j.at("failed_conditions").get_to(v.failed_conditions);
}

void to_json(json& j, const AnalysisReport& v) {
  j = json{{"input", v.input},
           {"polynomial", v.polynomial},
           {"irreducibility", {{"status", v.irreducibility},
                               {"certificate", v.irreducibility_certificate}}},
           {"primes", v.primes},
           {"verdicts", v.verdicts},
           {"monogenic", v.monogenic},
           {"certifying_primes", v.certifying_primes},
           {"notes", v.notes}};
}
void from_json(const json& j, AnalysisReport& v) {
  j.at("input").get_to(v.input);
  j.at("polynomial").get_to(v.polynomial);
  j.at("irreducibility").at("status").get_to(v.irreducibility);
  j.at("irreducibility").at("certificate").get_to(v.irreducibility_certificate);
  j.at("primes").get_to(v.primes);
  j.at("verdicts").get_to(v.verdicts);
  j.at("monogenic").get_to(v.monogenic);
  j.at("certifying_primes").get_to(v.certifying_primes);
  j.at("notes").get_to(v.notes);
}

// ---------------------------------------------------------------------------
// analyze

namespace {

std::vector<FactorEntry> factor_entries(const FactorList& list, std::string_view var) {
  std::vector<FactorEntry> out;
  for (const auto& fac : list.factors) {
    out.push_back({to_string(fac.poly, var), fac.multiplicity});
  }
  return out;
}

std::vector<FactorEntry> modular_entries(const FactorList& list) {
  std::vector<FactorEntry> out;
  for (const auto& fac : list.factors) {
    out.push_back({to_string(fac.poly.lift_symmetric()), fac.multiplicity});
  }
  return out;
}

PolygonEntry polygon_entry(const PhiComponent& comp) {
  PolygonEntry entry;
  entry.phi = to_string(comp.phi);
  entry.lift_adjusted = comp.lift_adjusted;
  if (!comp.polygon) return entry;
  for (const auto& v : comp.polygon->vertices()) entry.vertices.push_back({v.abscissa, v.ordinate});
  for (const auto& r : comp.residuals) {
    EdgeEntry e;
    e.l = r.edge.slope_num;
    e.e = r.edge.slope_den;
    e.length = r.edge.length();
    e.start = {r.edge.start.abscissa, r.edge.start.ordinate};
    e.end = {r.edge.end.abscissa, r.edge.end.ordinate};
    e.residual = to_string(r.residual);
    e.residual_factors = factor_entries(r.factors, "Y");
    entry.edges.push_back(std::move(e));
  }
  return entry;
}

IndexEntry index_entry(const IndexResult& r) {
  IndexEntry out;
  out.status = to_string(r.status);
  if (r.status == IndexStatus::Known) out.value = r.value;
  if (r.status == IndexStatus::Zero) out.value = 0;
  out.reason = r.reason;
  return out;
}

void record_error(PrimeReport& rep, const char* kind, const std::exception& e) {
  rep.error_kind = kind;
  rep.error = e.what();
}

struct PrimeOutcome {
  PrimeReport report;
  std::optional<IndexResult> index;
  bool lift_adjusted = false;
};

PrimeOutcome analyze_one(const IntPoly& f, std::int64_t p) {
  PrimeOutcome out;
  PrimeReport& rep = out.report;
  rep.p = p;
  try {
    require_prime(p);
    PrimeAnalysis pa = analyze_prime(f, p);
    rep.factors = modular_entries(pa.modular);
    for (const auto& comp : pa.components) {
      if (comp.lift_adjusted) out.lift_adjusted = true;
      if (comp.polygon) rep.polygons.push_back(polygon_entry(comp));
    }
    rep.regular = pa.regularity.regular;
    SplittingType st = splitting_from(pa);
    for (const auto& r : st.signature()) rep.splitting.push_back({r.e, r.f});
    for (const auto& prime : st.primes) rep.provenance.push_back(prime.describe());
    if (f.degree() != 6) {
      rep.index.reason = "index lookup covers sextics only";
    } else if (p != 2 && p != 3) {
      rep.index.reason = "index lookup covers p = 2, 3 only";
    } else {
      IndexResult r = index_valuation(st.signature(), static_cast<int>(p), pa.squarefree);
      rep.index = index_entry(r);
      out.index = r;
    }
  } catch (const NotRegular& e) {
    rep.regular = false;
    record_error(rep, "not-regular", e);
  } catch (const ZeroModP& e) {
    record_error(rep, "zero-mod-p", e);
  } catch (const InvalidPrime& e) {
    record_error(rep, "invalid-input", e);
  } catch (const PhiDividesF& e) {
    record_error(rep, "invalid-input", e);
  } catch (const Error& e) {
    record_error(rep, "invalid-input", e);
  } catch (const std::exception& e) {
    record_error(rep, "internal", e);
  }
  if (!rep.error_kind.empty()) rep.index.reason = "analysis failed";
  return out;
}

std::string claim_text(const TheoremVerdict& v) {
  std::string s = to_string(v.id);
  if (!v.claimed.empty()) {
    s += '[';
    for (std::size_t i = 0; i < v.claimed.size(); ++i) {
      if (i) s += ',';
      s += "v" + std::to_string(v.claimed[i].p) + "=" + std::to_string(v.claimed[i].v);
    }
    s += ']';
  }
  return s;
}

}  // namespace

AnalysisReport analyze(const IntPoly& f, std::span<const std::int64_t> primes,
                       std::string input_text) {
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError("polynomial must be monic of degree >= 1: " + to_string(f));
  }
  AnalysisReport report;
  report.input = input_text.empty() ? to_string(f) : std::move(input_text);
  report.polynomial = to_string(f);

  IrreducibilityResult irr = irreducibility(f);
  report.irreducibility = to_string(irr.status);
  report.irreducibility_certificate = irr.certificate;
  if (irr.status == Irreducibility::Reducible) {
    report.notes.push_back("reducible over Q (factor " + to_string(*irr.witness) +
                           "); splitting describes the algebra Q[x]/(f)");
  } else if (irr.status == Irreducibility::Unknown) {
    report.notes.push_back("irreducibility not established");
  }

  std::vector<PrimeIndex> indices;
  bool adjusted = false;
  for (std::int64_t p : primes) {
    PrimeOutcome o = analyze_one(f, p);
    adjusted = adjusted || o.lift_adjusted;
    if (o.index) indices.push_back({p, *o.index});
    report.primes.push_back(std::move(o.report));
  }
  if (adjusted) {
    report.notes.push_back("a factor lift divided f over Z; a nearby lift phi + p*h was used");
  }

  if (f.degree() == 6) {
    if (auto q = match_quadrinomial(f)) {
      for (const auto& v : applicable_checks(*q)) {
        VerdictEntry entry{to_string(v.id), v.applies, {}, v.failed_conditions};
        for (const auto& c : v.claimed) entry.claimed.push_back({c.p, c.v});
        report.verdicts.push_back(std::move(entry));
      }
      if (auto note = family_note(*q)) report.notes.push_back(*note);
    }
  }

  MonogenityVerdict mv = monogenity_verdict(indices);
  report.monogenic = to_string(mv.verdict);
  report.certifying_primes = mv.certifying_primes;
  return report;
}

ExitCode exit_code(const AnalysisReport& report) {
  for (const auto& p : report.primes) {
    if (p.error_kind.empty()) continue;
    if (p.error_kind == "not-regular") return ExitCode::NotRegular;
    if (p.error_kind == "zero-mod-p") return ExitCode::ZeroModP;
    if (p.error_kind == "invalid-input") return ExitCode::InvalidInput;
    return ExitCode::Internal;
  }
  return ExitCode::Ok;
}

namespace {

std::string pairs_text(const std::vector<std::array<int, 2>>& pairs) {
  std::string s;
  for (const auto& [e, f] : pairs) s += "(" + std::to_string(e) + "," + std::to_string(f) + ")";
  return s.empty() ? "-" : s;
}

std::string factors_text(const std::vector<FactorEntry>& fs) {
  std::string s;
  for (const auto& f : fs) {
    if (!s.empty()) s += " * ";
    s += "(" + f.phi + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

std::string index_text(const IndexEntry& idx) {
  std::string s = idx.status;
  if (idx.value) s += " " + std::to_string(*idx.value);
  return s;
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "f(x) = " << r.polynomial << "\n";
  out << "irreducibility: " << r.irreducibility;
  if (!r.irreducibility_certificate.empty()) out << " (" << r.irreducibility_certificate << ")";
  out << "\n";
  for (const auto& p : r.primes) {
    out << "\np = " << p.p << "\n";
    if (!p.factors.empty()) out << "  f mod p = " << factors_text(p.factors) << "\n";
    for (const auto& poly : p.polygons) {
      out << "  phi = " << poly.phi << (poly.lift_adjusted ? " (adjusted lift)" : "") << "\n";
      out << "    vertices:";
      for (const auto& v : poly.vertices) out << " (" << v[0] << "," << v[1] << ")";
      out << "\n";
      for (const auto& e : poly.edges) {
        out << "    edge (" << e.start[0] << "," << e.start[1] << ")-(" << e.end[0] << ","
            << e.end[1] << ") slope " << e.l << "/" << e.e << " length " << e.length
            << "  residual " << e.residual << " = " << factors_text(e.residual_factors) << "\n";
      }
    }
    if (!p.error_kind.empty()) {
      out << "  error [" << p.error_kind << "]: " << p.error << "\n";
      continue;
    }
    out << "  splitting: " << pairs_text(p.splitting) << "\n";
    for (const auto& line : p.provenance) out << "    " << line << "\n";
    out << "  index: " << index_text(p.index);
    if (!p.index.reason.empty()) out << " (" << p.index.reason << ")";
    out << "\n";
  }
  if (!r.verdicts.empty()) {
    out << "\nverdicts:\n";
    for (const auto& v : r.verdicts) {
      out << "  " << v.theorem << ": " << (v.applies ? "applies" : "does not apply");
      if (v.applies && !v.claimed.empty()) {
        out << ", claims";
        for (const auto& [p, val] : v.claimed) out << " v" << p << "=" << val;
      }
      if (!v.failed_conditions.empty()) {
        out << " (failed:";
        for (const auto& c : v.failed_conditions) out << " " << c;
        out << ")";
      }
      out << "\n";
    }
  }
  out << "\nmonogenic: " << r.monogenic;
  if (!r.certifying_primes.empty()) {
    out << " (certified at";
    for (auto p : r.certifying_primes) out << " " << p;
    out << ")";
  }
  out << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// scan

namespace {

mpz_class first_value(const CoefficientRange& r) {
  mpz_class shift = r.residue - r.min;
  mpz_class off;
  mpz_fdiv_r(off.get_mpz_t(), shift.get_mpz_t(), r.modulus.get_mpz_t());
  return r.min + off;
}

mpz_class json_integer(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw DomainError(std::string("scan spec: bad integer for ") + what);
    }
    return v;
  }
  throw DomainError(std::string("scan spec: expected integer for ") + what);
}

CoefficientRange range_from_json(const json& j, const char* what) {
  if (!j.is_object()) throw DomainError(std::string("scan spec: ") + what + " must be an object");
  CoefficientRange r;
  r.min = json_integer(j.at("min"), what);
  r.max = json_integer(j.at("max"), what);
  if (j.contains("modulus")) r.modulus = json_integer(j.at("modulus"), what);
  if (j.contains("residue")) r.residue = json_integer(j.at("residue"), what);
  if (r.modulus < 1) throw DomainError(std::string("scan spec: modulus must be positive for ") + what);
  return r;
}

std::uint64_t to_u64_capped(const mpz_class& v) {
  if (v > mpz_class(std::to_string(UINT64_MAX))) return UINT64_MAX;
  return std::stoull(v.get_str());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

mpz_class CoefficientRange::count() const {
  if (modulus < 1) return 0;
  mpz_class first = first_value(*this);
  if (first > max) return 0;
  mpz_class span = max - first;
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), span.get_mpz_t(), modulus.get_mpz_t());
  return n + 1;
}

mpz_class CoefficientRange::value(const mpz_class& k) const { return first_value(*this) + k * modulus; }

CoefficientRange parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 2 && parts.size() != 4) {
    throw DomainError("range must be min:max or min:max:modulus:residue, got '" + text + "'");
  }
  std::vector<mpz_class> v;
  for (const auto& p : parts) {
    mpz_class x;
    if (p.empty() || x.set_str(p, 10) != 0) throw DomainError("bad integer '" + p + "' in range");
    v.push_back(x);
  }
  CoefficientRange r{v[0], v[1], 1, 0};
  if (v.size() == 4) {
    r.modulus = v[2];
    r.residue = v[3];
  }
  if (r.modulus < 1) throw DomainError("range modulus must be positive");
  return r;
}

ScanSpec scan_spec_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("scan spec must be a JSON object");
  ScanSpec s;
  s.m = j.at("m").get<int>();
  if (s.m < 1 || s.m > 5) throw DomainError("scan spec: m must be in 1..5");
  s.a = range_from_json(j.at("a"), "a");
  s.b = range_from_json(j.at("b"), "b");
  s.c = range_from_json(j.at("c"), "c");
  if (j.contains("primes")) s.primes = j.at("primes").get<std::vector<std::int64_t>>();
  if (j.contains("limit")) s.limit = j.at("limit").get<std::uint64_t>();
  for (auto p : s.primes) require_prime(p);
  return s;
}

std::uint64_t scan_size(const ScanSpec& spec) {
  mpz_class total = spec.a.count() * spec.b.count() * spec.c.count();
  std::uint64_t n = to_u64_capped(total);
  if (spec.limit) n = std::min(n, *spec.limit);
  return n;
}

ScanRow scan_instance(const ScanSpec& spec, std::uint64_t ordinal) {
  mpz_class k(std::to_string(ordinal));
  mpz_class nb = spec.b.count(), nc = spec.c.count();
  mpz_class ic, ib, ia, rest;
  mpz_fdiv_qr(rest.get_mpz_t(), ic.get_mpz_t(), k.get_mpz_t(), nc.get_mpz_t());
  mpz_fdiv_qr(ia.get_mpz_t(), ib.get_mpz_t(), rest.get_mpz_t(), nb.get_mpz_t());

  QuadrinomialInput q{spec.a.value(ia), spec.b.value(ib), spec.c.value(ic), spec.m};
  ScanRow row;
  row.ordinal = ordinal;
  row.m = spec.m;
  row.a = q.a.get_str();
  row.b = q.b.get_str();
  row.c = q.c.get_str();

  try {
    AnalysisReport rep = analyze(q.polynomial(), spec.primes);
    row.irreducibility = rep.irreducibility;
    for (const auto& p : rep.primes) {
      ScanCell cell;
      cell.p = p.p;
      if (p.error_kind.empty()) {
        cell.splitting = pairs_text(p.splitting);
        cell.index = index_text(p.index);
      } else {
        cell.error = p.error_kind;
      }
      row.cells.push_back(std::move(cell));
    }
    row.monogenic = rep.monogenic;
    if (q.b != 0 || q.m == 1) {
      for (const auto& v : applicable_checks(q)) {
        if (v.applies) row.verdicts.push_back(claim_text(v));
      }
    }
  } catch (const std::exception& e) {
    row.irreducibility = "error";
    for (auto p : spec.primes) row.cells.push_back({p, "", "", e.what()});
    row.monogenic = "inconclusive";
  }
  return row;
}

void run_scan(const ScanSpec& spec, unsigned jobs, const std::function<void(const ScanRow&)>& sink) {
  const std::uint64_t total = scan_size(spec);
  if (jobs == 0) jobs = 1;
  const std::uint64_t block = std::max<std::uint64_t>(64, std::uint64_t{jobs} * 16);
  std::vector<ScanRow> buffer;
  for (std::uint64_t base = 0; base < total; base += block) {
    const std::uint64_t n = std::min(block, total - base);
    buffer.assign(n, ScanRow{});
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < n;) buffer[i] = scan_instance(spec, base + i);
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::uint64_t>(jobs, n); ++t) pool.emplace_back(worker);
    }
    for (const auto& row : buffer) sink(row);
  }
}

std::string scan_csv_header(const ScanSpec& spec) {
  std::string h = "ordinal,m,a,b,c,irreducibility";
  for (auto p : spec.primes) {
    std::string s = std::to_string(p);
    h += ",splitting_" + s + ",index_" + s + ",error_" + s;
  }
  return h + ",verdicts,monogenic";
}

std::string scan_csv_line(const ScanRow& row) {
  std::string s = std::to_string(row.ordinal) + "," + std::to_string(row.m) + "," + row.a + "," +
                  row.b + "," + row.c + "," + row.irreducibility;
  for (const auto& c : row.cells) {
    s += "," + csv_field(c.splitting) + "," + csv_field(c.index) + "," + csv_field(c.error);
  }
  std::string verdicts;
  for (const auto& v : row.verdicts) verdicts += (verdicts.empty() ? "" : " ") + v;
  return s + "," + csv_field(verdicts) + "," + row.monogenic;
}

std::string scan_text_line(const ScanRow& row) {
  std::ostringstream out;
  out << "#" << row.ordinal << " m=" << row.m << " a=" << row.a << " b=" << row.b << " c=" << row.c
      << " " << row.irreducibility;
  for (const auto& c : row.cells) {
    out << " | p=" << c.p << " ";
    if (c.error.empty()) {
      out << c.splitting << " " << c.index;
    } else {
      out << "error:" << c.error;
    }
  }
  out << " |";
  for (const auto& v : row.verdicts) out << " " << v;
  out << " | " << row.monogenic;
  return out.str();
}

json scan_row_json(const ScanRow& row) {
  json cells = json::array();
  for (const auto& c : row.cells) {
    json cell{{"p", c.p}};
    if (c.error.empty()) {
      cell["splitting"] = c.splitting;
      cell["index"] = c.index;
    } else {
      cell["error"] = c.error;
    }
    cells.push_back(std::move(cell));
  }
  return json{{"ordinal", row.ordinal},
              {"m", row.m},
              {"a", row.a},
              {"b", row.b},
              {"c", row.c},
              {"irreducibility", row.irreducibility},
              {"primes", cells},
              {"verdicts", row.verdicts},
              {"monogenic", row.monogenic}};
}

}  // namespace oreindex
