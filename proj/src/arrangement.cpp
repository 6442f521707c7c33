#include "afold/arrangement.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "afold/linalg.hpp"

namespace afold {

namespace {

std::vector<Rational> linear_coeffs(const VarSet& vars, const Polynomial& f) {
  if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous())
    throw StructuralError("arrangement form must be a nonzero homogeneous linear form");
  std::vector<Rational> c(vars.size(), Rational(0));
  for (const auto& t : f.terms()) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (t.mono[i]) c[i] = t.coeff;
  }
  return c;
}

Polynomial from_coeffs(const VarSet& vars, const std::vector<Rational>& c) {
  std::vector<Term> terms;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({Monomial::var(vars.size(), i), c[i]});
  return Polynomial::from_terms(vars, std::move(terms));
}

void scale_canonical(std::vector<Rational>& c) {
  for (auto& x : c) {
    if (x != 0) {
      Rational inv = Rational(1) / x;
      for (auto& y : c) y *= inv;
      return;
    }
  }
}

// rref rows of the span of the given coefficient vectors
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& rows,
                                              size_t width) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), width);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
  size_t rank = m.row_reduce();
  std::vector<std::vector<Rational>> out;
  for (size_t r = 0; r < rank; ++r) {
    std::vector<Rational> row(width);
    for (size_t c = 0; c < width; ++c) row[c] = m.at(r, c);
    out.push_back(std::move(row));
  }
  return out;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  std::vector<std::vector<Rational>> rows = basis;
  rows.push_back(v);
  return span_basis(rows, v.size()).size() == basis.size();
}

std::string span_key(const std::vector<std::vector<Rational>>& basis) {
  std::string key;
  for (const auto& row : basis) {
    for (const auto& x : row) {
      key += to_string(x);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

Arrangement::Arrangement(VarSet vars, std::vector<std::pair<Polynomial, unsigned>> forms,
                         std::vector<std::string>* warnings)
    : vars_(std::move(vars)) {
  if (forms.empty()) throw StructuralError("arrangement needs at least one form");
  struct Entry {
    std::vector<Rational> coeffs;
    Polynomial form;
    unsigned mult;
  };
  std::vector<Entry> entries;
  for (auto& [f, mult] : forms) {
    if (mult == 0) throw StructuralError("multiplicity must be positive");
    if (f.vars() != vars_) throw StructuralError("form ring mismatch");
    std::vector<Rational> c = linear_coeffs(vars_, f);
    scale_canonical(c);
    Polynomial canon = from_coeffs(vars_, c);
    bool merged = false;
    for (auto& e : entries) {
      if (e.coeffs == c) {
        e.mult += mult;
        merged = true;
        if (warnings)
          warnings->push_back("proportional forms merged: " + canon.format() +
                              " now has multiplicity " + std::to_string(e.mult));
        break;
      }
    }
    if (!merged) entries.push_back({std::move(c), std::move(canon), mult});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return Polynomial::canonical_compare(a.form, b.form) < 0;
  });
  for (auto& e : entries) support_.push_back({std::move(e.form), std::move(e.coeffs), e.mult});

  std::vector<std::vector<Rational>> rows;
  for (const auto& w : support_) rows.push_back(w.coeffs);
  rank_ = static_cast<unsigned>(span_basis(rows, vars_.size()).size());
  compute_flats();
}

unsigned Arrangement::n() const {
  unsigned total = 0;
  for (const auto& w : support_) total += w.mult;
  return total;
}

bool Arrangement::is_simple() const {
  return std::all_of(support_.begin(), support_.end(),
                     [](const WeightedForm& w) { return w.mult == 1; });
}

std::vector<Polynomial> Arrangement::forms_with_multiplicity() const {
  std::vector<Polynomial> out;
  for (const auto& w : support_)
    for (unsigned c = 0; c < w.mult; ++c) out.push_back(w.form);
  return out;
}

void Arrangement::compute_flats() {
  size_t k = vars_.size();
  size_t cap = std::min(s(), k);
  std::map<std::string, Flat> seen;
  std::vector<size_t> subset;
  // spans of subsets up to rank-many forms cover the whole lattice
  auto visit = [&](const std::vector<size_t>& idxs) {
    std::vector<std::vector<Rational>> rows;
    for (size_t i : idxs) rows.push_back(support_[i].coeffs);
    auto basis = span_basis(rows, k);
    std::string key = span_key(basis);
    if (seen.count(key)) return;
    Flat f;
    f.rank = static_cast<unsigned>(basis.size());
    for (size_t i = 0; i < support_.size(); ++i) {
      if (in_span(basis, support_[i].coeffs)) {
        f.form_idxs.push_back(i);
        f.nu += support_[i].mult;
      }
    }
    for (const auto& row : basis) f.basis.push_back(from_coeffs(vars_, row));
    seen.emplace(std::move(key), std::move(f));
  };
  auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
    if (!subset.empty()) visit(subset);
    if (depth == cap) return;
    for (size_t i = start; i < support_.size(); ++i) {
      subset.push_back(i);
      self(self, i + 1, depth + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0, 0);
  for (auto& [key, f] : seen) flats_.push_back(std::move(f));
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.form_idxs < b.form_idxs;
  });
}

unsigned Arrangement::nu_of_span(const std::vector<Polynomial>& linear_forms) const {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : linear_forms) rows.push_back(linear_coeffs(vars_, f));
  auto basis = span_basis(rows, vars_.size());
  unsigned total = 0;
  for (const auto& w : support_)
    if (in_span(basis, w.coeffs)) total += w.mult;
  return total;
}

Arrangement Arrangement::replicated(unsigned e) const {
  if (e == 0) throw StructuralError("replication factor must be positive");
  std::vector<std::pair<Polynomial, unsigned>> forms;
  for (const auto& w : support_) forms.emplace_back(w.form, w.mult * e);
  return Arrangement(vars_, std::move(forms));
}

Arrangement Arrangement::minus_one_copy(size_t idx) const {
  if (idx >= support_.size()) throw StructuralError("support index out of range");
  std::vector<std::pair<Polynomial, unsigned>> forms;
  for (size_t i = 0; i < support_.size(); ++i) {
    unsigned m = support_[i].mult - (i == idx ? 1 : 0);
    if (m > 0) forms.emplace_back(support_[i].form, m);
  }
  return Arrangement(vars_, std::move(forms));
}

Arrangement Arrangement::minus_all_copies(size_t idx) const {
  if (idx >= support_.size()) throw StructuralError("support index out of range");
  std::vector<std::pair<Polynomial, unsigned>> forms;
  for (size_t i = 0; i < support_.size(); ++i)
    if (i != idx) forms.emplace_back(support_[i].form, support_[i].mult);
  return Arrangement(vars_, std::move(forms));
}

bool Arrangement::meets_properly() const {
  size_t cap = std::min(s(), vars_.size());
  std::vector<size_t> subset;
  bool ok = true;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (!ok) return;
    if (!subset.empty()) {
      std::vector<std::vector<Rational>> rows;
      for (size_t i : subset) rows.push_back(support_[i].coeffs);
      if (span_basis(rows, vars_.size()).size() != subset.size()) {
        ok = false;
        return;
      }
    }
    if (subset.size() == cap) return;
    for (size_t i = start; i < support_.size(); ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return ok;
}

std::vector<Circuit> Arrangement::three_circuits() const {
  std::vector<Circuit> out;
  size_t k = vars_.size();
  for (size_t i = 0; i < s(); ++i) {
    for (size_t j = i + 1; j < s(); ++j) {
      for (size_t l = j + 1; l < s(); ++l) {
        QMatrix m(k, 3);
        for (size_t r = 0; r < k; ++r) {
          m.at(r, 0) = support_[i].coeffs[r];
          m.at(r, 1) = support_[j].coeffs[r];
          m.at(r, 2) = support_[l].coeffs[r];
        }
        auto ns = m.nullspace();
        if (ns.empty()) continue;
        if (ns.size() > 1) throw StructuralError("coincident forms in circuit scan");
        Circuit c;
        c.idxs = {i, j, l};
        Rational inv = Rational(1) / ns[0][0];
        for (int q = 0; q < 3; ++q) c.coeffs[q] = ns[0][q] * inv;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<DependentQuad> Arrangement::dependent_quadruples() const {
  std::vector<DependentQuad> out;
  size_t k = vars_.size();
  for (size_t a = 0; a < s(); ++a) {
    for (size_t b = a + 1; b < s(); ++b) {
      for (size_t c = b + 1; c < s(); ++c) {
        for (size_t d = c + 1; d < s(); ++d) {
          QMatrix m(k, 4);
          std::array<size_t, 4> idxs = {a, b, c, d};
          for (size_t r = 0; r < k; ++r)
            for (int q = 0; q < 4; ++q) m.at(r, q) = support_[idxs[q]].coeffs[r];
          auto ns = m.nullspace();
          if (ns.empty()) continue;
          DependentQuad dq;
          dq.idxs = idxs;
          auto rows = span_basis(ns, 4);  // canonical rref of the relation space
          for (const auto& row : rows) {
            std::array<Rational, 4> dep;
            for (int q = 0; q < 4; ++q) dep[q] = row[q];
            dq.deps.push_back(std::move(dep));
          }
          out.push_back(std::move(dq));
        }
      }
    }
  }
  return out;
}

Ideal flat_prime(const VarSet& vars, const Flat& f) { return Ideal(vars, f.basis); }

// ---------------------------------------------------------------------------
// JSON interface

Arrangement Arrangement::from_json(const std::string& text, std::vector<std::string>* warnings) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("forms"))
    throw ParseError("expected object with 'vars' and 'forms'", 0);
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) throw ParseError("'vars' entries must be strings", 0);
    names.push_back(v.get<std::string>());
  }
  VarSet vars = VarSet::standard(names);
  std::vector<std::pair<Polynomial, unsigned>> forms;
  for (const auto& f : j.at("forms")) {
    if (!f.is_object() || !f.contains("coeffs"))
      throw ParseError("each form needs a 'coeffs' array", 0);
    const auto& cj = f.at("coeffs");
    if (!cj.is_array() || cj.size() != names.size())
      throw ParseError("'coeffs' length must match 'vars'", 0);
    std::vector<Rational> c;
    for (const auto& x : cj) {
      if (x.is_number_integer())
        c.emplace_back(static_cast<long>(x.get<int64_t>()));
      else if (x.is_string())
        c.push_back(parse_rational(x.get<std::string>()));
      else
        throw ParseError("coefficients must be integers or rational strings", 0);
    }
    unsigned mult = 1;
    if (f.contains("mult")) {
      if (!f.at("mult").is_number_integer() || f.at("mult").get<int64_t>() < 1)
        throw ParseError("'mult' must be a positive integer", 0);
      mult = static_cast<unsigned>(f.at("mult").get<int64_t>());
    }
    forms.emplace_back(from_coeffs(vars, c), mult);
  }
  return Arrangement(std::move(vars), std::move(forms), warnings);
}

std::string Arrangement::to_json() const {
  nlohmann::json j;
  j["vars"] = nlohmann::json::array();
  for (size_t i = 0; i < vars_.size(); ++i) j["vars"].push_back(vars_.name(i));
  j["forms"] = nlohmann::json::array();
  for (const auto& w : support_) {
    nlohmann::json f;
    f["coeffs"] = nlohmann::json::array();
    for (const auto& c : w.coeffs) {
      if (c.get_den() == 1 && c.get_num().fits_slong_p())
        f["coeffs"].push_back(static_cast<int64_t>(c.get_num().get_si()));
      else
        f["coeffs"].push_back(to_string(c));
    }
    f["mult"] = w.mult;
    j["forms"].push_back(std::move(f));
  }
  return j.dump();
}

}  // namespace afold
