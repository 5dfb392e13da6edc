#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "corings/comatrix.hpp"
#include "corings/graded.hpp"
#include "corings/picard.hpp"

namespace corings {

using Json = nlohmann::ordered_json;

// schema violation, annotated with the document position it was found at
struct ParseError : std::runtime_error {
  std::string where;
  ParseError(std::string at, const std::string& msg)
      : std::runtime_error("at " + at + ": " + msg), where(std::move(at)) {}
};

namespace regio {

inline std::string key_at(const std::string& base, const std::string& key) {
  return base + "." + key;
}

inline std::string idx_at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

inline const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing key '") + key + "'");
  return *it;
}

inline const Json* opt_member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

inline void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                        const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) { known = true; break; }
    if (!known) throw ParseError(where, "unknown key '" + it.key() + "'");
  }
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

inline std::size_t as_index(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::size_t>(j.get<std::int64_t>());
  throw ParseError(where, "expected a nonnegative integer");
}

inline std::size_t as_size(const Json& j, std::size_t lo, std::size_t hi,
                           const std::string& where) {
  auto n = as_index(j, where);
  if (n < lo || n > hi)
    throw ParseError(where, "expected an integer between " + std::to_string(lo) + " and " +
                                std::to_string(hi));
  return n;
}

// indices into a finite enumerated set; every entry must stay below `bound`
inline std::vector<std::size_t> indices_in(const Json& j, std::size_t count, std::size_t bound,
                                           const std::string& where) {
  if (!j.is_array() || j.size() != count)
    throw ParseError(where, "expected an array of " + std::to_string(count) + " indices");
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = as_index(j[i], idx_at(where, i));
    if (out[i] >= bound)
      throw ParseError(idx_at(where, i), "index out of range, bound " + std::to_string(bound));
  }
  return out;
}

inline typename QField::K scalar_in(const QField& f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return f.from_long(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const std::exception& ex) {
      throw ParseError(where, ex.what());
    }
  }
  throw ParseError(where, "expected a rational scalar, an integer or an \"a/b\" string");
}

inline typename FpField::K scalar_in(const FpField& f, const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Fp(j.get<std::uint64_t>(), f.p);
  if (j.is_number_integer()) return f.from_long(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const std::exception& ex) {
      throw ParseError(where, ex.what());
    }
  }
  throw ParseError(where, "expected a prime field scalar as an integer");
}

inline Json scalar_out(const QField&, const typename QField::K& v) { return Json(v.str()); }
inline Json scalar_out(const FpField&, const typename FpField::K& v) { return Json(v.v); }

template <class F>
Mat<F> matrix_in(F f, const Json& j, std::size_t rows, std::size_t cols,
                 const std::string& where) {
  auto shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where, "expected a " + shape + " matrix as nested row arrays");
  Mat<F> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(idx_at(where, r), "expected a row of " + std::to_string(cols) + " scalars");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = scalar_in(f, row[c], idx_at(idx_at(where, r), c));
  }
  return m;
}

template <class F>
Json matrix_out(F f, const Mat<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(scalar_out(f, m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Mat<F> vector_in(F f, const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    throw ParseError(where, "expected an array of " + std::to_string(len) + " scalars");
  Mat<F> v(f, len, 1);
  for (std::size_t i = 0; i < len; ++i) v.at(i, 0) = scalar_in(f, j[i], idx_at(where, i));
  return v;
}

template <class F>
Json vector_out(F f, const Mat<F>& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows; ++i) out.push_back(scalar_out(f, v.at(i, 0)));
  return out;
}

// multiplication table from sparse [i, j, k, value] rows: e_i e_j has
// coefficient value on e_k
template <class F>
Mat<F> constants_in(F f, const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of [i, j, k, value] rows");
  Mat<F> mult(f, dim, dim * dim);
  std::vector<bool> seen(dim * dim * dim, false);
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto w = idx_at(where, r);
    const Json& row = j[r];
    if (!row.is_array() || row.size() != 4)
      throw ParseError(w, "expected a quadruple [i, j, k, value]");
    std::size_t qi = as_index(row[0], idx_at(w, 0));
    std::size_t qj = as_index(row[1], idx_at(w, 1));
    std::size_t qk = as_index(row[2], idx_at(w, 2));
    if (qi >= dim || qj >= dim || qk >= dim)
      throw ParseError(w, "structure constant index out of range");
    if (seen[(qi * dim + qj) * dim + qk]) throw ParseError(w, "duplicate structure constant");
    seen[(qi * dim + qj) * dim + qk] = true;
    mult.at(qk, qi * dim + qj) = scalar_in(f, row[3], idx_at(w, 3));
  }
  return mult;
}

template <class F>
Json constants_out(F f, const Mat<F>& mult, std::size_t dim) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& v = mult.at(k, i * dim + j);
        if (v.is_zero()) continue;
        out.push_back(Json::array({i, j, k, scalar_out(f, v)}));
      }
  return out;
}

inline Json indices_out(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace regio

struct Command {
  std::string cmd;
  std::vector<std::string> targets;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "check",    "cotensor", "dual",          "cointegral", "cosplit",        "frobenius",
      "entwine",  "takeuchi", "graded-bridge", "inner",      "context-verify", "comatrix"};
  return names;
}

// one named structure: the constructed object (when construction succeeded)
// together with its validity report and the canonical form of its declaration
template <class F>
struct RegEntry {
  std::string name;
  std::string kind;
  std::string construct;
  std::string label;
  Report report{"", {}};
  bool valid = false;
  Json canonical;

  std::optional<Group> group;
  std::optional<GSet> gset;
  std::shared_ptr<const Algebra<F>> algebra;
  std::optional<GradedAlgebra<F>> graded_algebra;
  std::shared_ptr<const Bimodule<F>> module;
  std::shared_ptr<const Coring<F>> coring;
  std::optional<EntwiningStructure<F>> entwining;
  std::optional<CoringAutomorphism<F>> automorphism;
  std::optional<Bicomodule<F>> bicomodule;
  std::optional<AdjunctionContext<F>> context;
  std::optional<GradedModule<F>> graded_module;

  bool constructed() const {
    return group || gset || algebra || graded_algebra || module || coring || entwining ||
           automorphism || bicomodule || context || graded_module;
  }
};

template <class F>
struct Registry {
  F f;
  std::vector<RegEntry<F>> entries;
  std::map<std::string, std::size_t> index;
  std::vector<Command> commands;

  const RegEntry<F>* find(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? nullptr : &entries[it->second];
  }
};

namespace regio {

// resolves a named reference: the target must exist, carry the expected kind
// and have produced an object, otherwise nothing downstream can be shaped
template <class F>
const RegEntry<F>& ref_in(const Registry<F>& reg, const Json& decl, const char* key,
                          const char* kind, RegEntry<F>& e, Json& canon,
                          const std::string& where) {
  auto w = key_at(where, key);
  auto name = as_string(member(decl, key, where), w);
  const auto* dep = reg.find(name);
  if (!dep) throw ParseError(w, "dangling reference '" + name + "'");
  if (dep->kind != kind)
    throw ParseError(w, "'" + name + "' has kind " + dep->kind + ", expected " + kind);
  if (!dep->constructed())
    throw ParseError(w, "'" + name + "' failed to construct and cannot be referenced");
  canon[key] = name;
  if (!dep->valid) e.report.issues.push_back("depends on invalid structure '" + name + "'");
  return *dep;
}

inline void check_same_group(const GSet& x, const Group& grp, const std::string& where) {
  if (x.group_n != grp.n)
    throw ParseError(where, "the action group of the G-set does not match the grading group");
}

}  // namespace regio

template <class F>
void parse_structure(Registry<F>& reg, const Json& decl, const std::string& where) {
  using namespace regio;
  auto f = reg.f;
  RegEntry<F> e;
  e.name = as_string(member(decl, "name", where), key_at(where, "name"));
  if (e.name.empty()) throw ParseError(key_at(where, "name"), "empty structure name");
  if (reg.find(e.name))
    throw ParseError(key_at(where, "name"), "duplicate structure name '" + e.name + "'");
  e.kind = as_string(member(decl, "kind", where), key_at(where, "kind"));
  e.construct = as_string(member(decl, "construct", where), key_at(where, "construct"));
  e.label = e.name;
  Json canon = Json::object();
  canon["name"] = e.name;
  canon["kind"] = e.kind;
  canon["construct"] = e.construct;

  auto bad_construct = [&]() -> ParseError {
    return ParseError(key_at(where, "construct"),
                      "unknown construct '" + e.construct + "' for kind " + e.kind);
  };

  // schema checks throw; invariant failures during construction leave the
  // entry in the registry as invalid with the reason on its report
  try {
    if (e.kind == "group") {
      if (e.construct == "cyclic") {
        expect_keys(decl, {"name", "kind", "construct", "order"}, where);
        auto n = as_size(member(decl, "order", where), 1, 128, key_at(where, "order"));
        canon["order"] = n;
        e.group = cyclic_group(n);
      } else if (e.construct == "symmetric") {
        expect_keys(decl, {"name", "kind", "construct", "letters"}, where);
        auto k = as_size(member(decl, "letters", where), 1, 5, key_at(where, "letters"));
        canon["letters"] = k;
        e.group = symmetric_group(k);
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "table"}, where);
        const Json& tj = member(decl, "table", where);
        auto wt = key_at(where, "table");
        if (!tj.is_array() || tj.empty() || tj.size() > 128)
          throw ParseError(wt, "expected a square multiplication table");
        std::size_t n = tj.size();
        Group g;
        g.n = n;
        g.table.reserve(n * n);
        Json rows = Json::array();
        for (std::size_t r = 0; r < n; ++r) {
          auto row = indices_in(tj[r], n, n, idx_at(wt, r));
          for (auto v : row) g.table.push_back(v);
          rows.push_back(indices_out(row));
        }
        canon["table"] = std::move(rows);
        for (std::size_t c = 0; c < n; ++c) {
          bool id = true;
          for (std::size_t x = 0; x < n; ++x)
            id = id && g.table[c * n + x] == x && g.table[x * n + c] == x;
          if (id) { g.id = c; break; }
        }
        g.label = e.name;
        e.group = std::move(g);
      } else {
        throw bad_construct();
      }
      e.label = e.group->label;
      e.report.absorb(e.group->check());

    } else if (e.kind == "gset") {
      if (e.construct == "regular") {
        expect_keys(decl, {"name", "kind", "construct", "group"}, where);
        const auto& dep = ref_in(reg, decl, "group", "group", e, canon, where);
        e.gset = regular_gset(*dep.group);
        e.label = e.gset->label;
        e.report.absorb(e.gset->check(*dep.group));
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "group", "points", "action"}, where);
        const auto& dep = ref_in(reg, decl, "group", "group", e, canon, where);
        auto points =
            as_size(member(decl, "points", where), 1, 128, key_at(where, "points"));
        canon["points"] = points;
        const Json& aj = member(decl, "action", where);
        auto wa = key_at(where, "action");
        if (!aj.is_array() || aj.size() != points)
          throw ParseError(wa, "expected one action row per point");
        GSet x;
        x.group_n = dep.group->n;
        x.n = points;
        x.act.reserve(points * x.group_n);
        Json rows = Json::array();
        for (std::size_t r = 0; r < points; ++r) {
          auto row = indices_in(aj[r], x.group_n, points, idx_at(wa, r));
          for (auto v : row) x.act.push_back(v);
          rows.push_back(indices_out(row));
        }
        canon["action"] = std::move(rows);
        x.label = e.name;
        e.gset = std::move(x);
        e.label = e.name;
        e.report.absorb(e.gset->check(*dep.group));
      } else {
        throw bad_construct();
      }

    } else if (e.kind == "algebra") {
      if (e.construct == "matrix") {
        expect_keys(decl, {"name", "kind", "construct", "n"}, where);
        auto n = as_size(member(decl, "n", where), 1, 8, key_at(where, "n"));
        canon["n"] = n;
        e.algebra = share_alg(matrix_algebra(f, n));
      } else if (e.construct == "group") {
        expect_keys(decl, {"name", "kind", "construct", "group"}, where);
        const auto& dep = ref_in(reg, decl, "group", "group", e, canon, where);
        e.algebra = share_alg(group_algebra(f, *dep.group));
      } else if (e.construct == "trivial") {
        expect_keys(decl, {"name", "kind", "construct"}, where);
        e.algebra = scalar_algebra(f);
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "dim", "unit", "mult"}, where);
        auto dim = as_size(member(decl, "dim", where), 1, 64, key_at(where, "dim"));
        canon["dim"] = dim;
        Algebra<F> a;
        a.f = f;
        a.dim = dim;
        a.unit = vector_in(f, member(decl, "unit", where), dim, key_at(where, "unit"));
        a.mult = constants_in(f, member(decl, "mult", where), dim, key_at(where, "mult"));
        canon["unit"] = vector_out(f, a.unit);
        canon["mult"] = constants_out(f, a.mult, dim);
        a.label = e.name;
        e.algebra = share_alg(std::move(a));
      } else {
        throw bad_construct();
      }
      e.label = e.algebra->label;
      e.report.absorb(e.algebra->check());

    } else if (e.kind == "graded-algebra") {
      if (e.construct == "group") {
        expect_keys(decl, {"name", "kind", "construct", "group"}, where);
        const auto& dep = ref_in(reg, decl, "group", "group", e, canon, where);
        e.graded_algebra = group_graded(f, *dep.group);
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "algebra", "group", "degrees"}, where);
        const auto& da = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        const auto& dg = ref_in(reg, decl, "group", "group", e, canon, where);
        GradedAlgebra<F> ga;
        ga.alg = da.algebra;
        ga.grp = *dg.group;
        ga.deg = indices_in(member(decl, "degrees", where), da.algebra->dim, dg.group->n,
                            key_at(where, "degrees"));
        canon["degrees"] = indices_out(ga.deg);
        e.graded_algebra = std::move(ga);
      } else {
        throw bad_construct();
      }
      e.label = e.graded_algebra->alg->label + " graded by " + e.graded_algebra->grp.label;
      e.report.absorb(e.graded_algebra->check());

    } else if (e.kind == "module") {
      if (e.construct == "regular") {
        expect_keys(decl, {"name", "kind", "construct", "algebra"}, where);
        const auto& dep = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        e.module = share(regular_bimodule(dep.algebra));
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "left", "right", "dim", "lact", "ract"},
                    where);
        const auto& dl = ref_in(reg, decl, "left", "algebra", e, canon, where);
        const auto& dr = ref_in(reg, decl, "right", "algebra", e, canon, where);
        auto dim = as_size(member(decl, "dim", where), 1, 64, key_at(where, "dim"));
        canon["dim"] = dim;
        Bimodule<F> m;
        m.f = f;
        m.A = dl.algebra;
        m.B = dr.algebra;
        m.dim = dim;
        m.lact = matrix_in(f, member(decl, "lact", where), dim, dl.algebra->dim * dim,
                           key_at(where, "lact"));
        m.ract = matrix_in(f, member(decl, "ract", where), dim, dim * dr.algebra->dim,
                           key_at(where, "ract"));
        canon["lact"] = matrix_out(f, m.lact);
        canon["ract"] = matrix_out(f, m.ract);
        m.label = e.name;
        e.module = share(std::move(m));
      } else {
        throw bad_construct();
      }
      e.label = e.module->label;
      e.report.absorb(e.module->check());

    } else if (e.kind == "coring") {
      if (e.construct == "trivial") {
        expect_keys(decl, {"name", "kind", "construct", "algebra"}, where);
        const auto& dep = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        e.coring = share_coring(trivial_coring(dep.algebra));
      } else if (e.construct == "grouplike") {
        expect_keys(decl, {"name", "kind", "construct", "algebra", "points"}, where);
        const auto& dep = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        auto nx = as_size(member(decl, "points", where), 1, 128, key_at(where, "points"));
        canon["points"] = nx;
        e.coring = share_coring(grouplike_coring(dep.algebra, nx));
      } else if (e.construct == "matrix") {
        expect_keys(decl, {"name", "kind", "construct", "algebra", "n"}, where);
        const auto& dep = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        auto n = as_size(member(decl, "n", where), 1, 8, key_at(where, "n"));
        canon["n"] = n;
        e.coring = share_coring(matrix_coring(dep.algebra, n));
      } else if (e.construct == "graded") {
        expect_keys(decl, {"name", "kind", "construct", "graded-algebra", "gset"}, where);
        const auto& dga = ref_in(reg, decl, "graded-algebra", "graded-algebra", e, canon, where);
        const auto& dx = ref_in(reg, decl, "gset", "gset", e, canon, where);
        check_same_group(*dx.gset, dga.graded_algebra->grp, key_at(where, "gset"));
        e.coring = share_coring(build_graded_coring(*dga.graded_algebra, *dx.gset));
      } else if (e.construct == "takeuchi") {
        expect_keys(decl, {"name", "kind", "construct", "entwining"}, where);
        const auto& dep = ref_in(reg, decl, "entwining", "entwining", e, canon, where);
        e.coring = share_coring(assemble_takeuchi(*dep.entwining));
      } else if (e.construct == "comatrix") {
        expect_keys(decl, {"name", "kind", "construct", "module"}, where);
        const auto& dep = ref_in(reg, decl, "module", "module", e, canon, where);
        e.coring = share_coring(comatrix_coring(*dep.module).coring);
      } else if (e.construct == "table") {
        expect_keys(decl,
                    {"name", "kind", "construct", "algebra", "dim", "lact", "ract", "delta",
                     "counit"},
                    where);
        const auto& dep = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        auto da = dep.algebra->dim;
        auto dim = as_size(member(decl, "dim", where), 1, 64, key_at(where, "dim"));
        canon["dim"] = dim;
        Bimodule<F> car;
        car.f = f;
        car.A = dep.algebra;
        car.B = dep.algebra;
        car.dim = dim;
        car.lact =
            matrix_in(f, member(decl, "lact", where), dim, da * dim, key_at(where, "lact"));
        car.ract =
            matrix_in(f, member(decl, "ract", where), dim, dim * da, key_at(where, "ract"));
        car.label = e.name;
        // the comultiplication is declared into the full tensor square and
        // projected onto the relative tensor over the base
        auto delta_full = matrix_in(f, member(decl, "delta", where), dim * dim, dim,
                                    key_at(where, "delta"));
        auto eps = matrix_in(f, member(decl, "counit", where), da, dim, key_at(where, "counit"));
        canon["lact"] = matrix_out(f, car.lact);
        canon["ract"] = matrix_out(f, car.ract);
        canon["delta"] = matrix_out(f, delta_full);
        canon["counit"] = matrix_out(f, eps);
        auto carrier = share(std::move(car));
        auto cc = tensor_over(carrier, carrier);
        e.coring = share_coring(
            make_coring(carrier, cc.proj * delta_full, std::move(eps), e.name));
      } else {
        throw bad_construct();
      }
      e.label = e.coring->label;
      e.report.absorb(check_coring(*e.coring));

    } else if (e.kind == "entwining") {
      if (e.construct == "graded") {
        expect_keys(decl, {"name", "kind", "construct", "graded-algebra", "gset"}, where);
        const auto& dga = ref_in(reg, decl, "graded-algebra", "graded-algebra", e, canon, where);
        const auto& dx = ref_in(reg, decl, "gset", "gset", e, canon, where);
        check_same_group(*dx.gset, dga.graded_algebra->grp, key_at(where, "gset"));
        e.entwining = graded_entwining(*dga.graded_algebra, *dx.gset);
      } else if (e.construct == "twist") {
        expect_keys(decl, {"name", "kind", "construct", "algebra", "coring"}, where);
        const auto& da = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        const auto& dc = ref_in(reg, decl, "coring", "coring", e, canon, where);
        e.entwining = twist_entwining(da.algebra, *dc.coring);
      } else if (e.construct == "table") {
        expect_keys(decl, {"name", "kind", "construct", "algebra", "coring", "psi"}, where);
        const auto& da = ref_in(reg, decl, "algebra", "algebra", e, canon, where);
        const auto& dc = ref_in(reg, decl, "coring", "coring", e, canon, where);
        std::size_t na = da.algebra->dim, nc = dc.coring->dim();
        auto psi =
            matrix_in(f, member(decl, "psi", where), na * nc, nc * na, key_at(where, "psi"));
        canon["psi"] = matrix_out(f, psi);
        e.entwining = EntwiningStructure<F>{da.algebra, *dc.coring, std::move(psi)};
      } else {
        throw bad_construct();
      }
      e.label = "entwining(" + e.entwining->A->label + ", " + e.entwining->C.label + ")";
      e.report.absorb(check_entwining(*e.entwining));

    } else if (e.kind == "automorphism") {
      const auto& dep = ref_in(reg, decl, "coring", "coring", e, canon, where);
      auto c = dep.coring;
      auto da = c->A->dim;
      if (e.construct == "identity") {
        expect_keys(decl, {"name", "kind", "construct", "coring"}, where);
        e.automorphism = identity_automorphism(c);
      } else if (e.construct == "conjugation") {
        expect_keys(decl, {"name", "kind", "construct", "coring", "unit"}, where);
        auto u = vector_in(f, member(decl, "unit", where), da, key_at(where, "unit"));
        canon["unit"] = vector_out(f, u);
        e.automorphism = conjugation_automorphism(c, u);
      } else if (e.construct == "base") {
        expect_keys(decl, {"name", "kind", "construct", "coring", "matrix"}, where);
        auto sigma =
            matrix_in(f, member(decl, "matrix", where), da, da, key_at(where, "matrix"));
        canon["matrix"] = matrix_out(f, sigma);
        e.automorphism = trivial_automorphism(c, std::move(sigma), e.name);
      } else if (e.construct == "grouplike") {
        expect_keys(decl, {"name", "kind", "construct", "coring", "points", "map", "base"},
                    where);
        auto nx = as_size(member(decl, "points", where), 1, 128, key_at(where, "points"));
        canon["points"] = nx;
        auto xmap = regio::indices_in(member(decl, "map", where), nx, nx, key_at(where, "map"));
        canon["map"] = indices_out(xmap);
        Mat<F> alpha = Mat<F>::identity(f, da);
        if (const Json* bj = opt_member(decl, "base"))
          alpha = matrix_in(f, *bj, da, da, key_at(where, "base"));
        canon["base"] = matrix_out(f, alpha);
        e.automorphism = grouplike_map_automorphism(c, nx, xmap, std::move(alpha), e.name);
      } else {
        throw bad_construct();
      }
      e.automorphism->label = e.name;
      e.label = e.name;
      e.report.absorb(check_automorphism(*e.automorphism));

    } else if (e.kind == "bicomodule") {
      if (e.construct == "regular") {
        expect_keys(decl, {"name", "kind", "construct", "coring"}, where);
        const auto& dep = ref_in(reg, decl, "coring", "coring", e, canon, where);
        e.bicomodule = regular_bicomodule(dep.coring);
      } else if (e.construct == "twisted") {
        expect_keys(decl, {"name", "kind", "construct", "automorphism"}, where);
        const auto& dep = ref_in(reg, decl, "automorphism", "automorphism", e, canon, where);
        e.bicomodule = induced_bicomodule(*dep.automorphism);
      } else {
        throw bad_construct();
      }
      e.label = e.bicomodule->label;
      e.report.absorb(check_bicomodule(*e.bicomodule));

    } else if (e.kind == "context") {
      if (e.construct == "identity") {
        expect_keys(decl, {"name", "kind", "construct", "coring"}, where);
        const auto& dep = ref_in(reg, decl, "coring", "coring", e, canon, where);
        e.context = identity_context(dep.coring);
      } else if (e.construct == "comatrix") {
        expect_keys(decl, {"name", "kind", "construct", "module"}, where);
        const auto& dep = ref_in(reg, decl, "module", "module", e, canon, where);
        e.context = comatrix_context(*dep.module);
      } else {
        throw bad_construct();
      }
      e.label = e.context->label;
      e.report.absorb(verify_context(*e.context));

    } else if (e.kind == "graded-module") {
      if (e.construct == "regular") {
        expect_keys(decl, {"name", "kind", "construct", "graded-algebra", "gset", "point"},
                    where);
        const auto& dga = ref_in(reg, decl, "graded-algebra", "graded-algebra", e, canon, where);
        const auto& dx = ref_in(reg, decl, "gset", "gset", e, canon, where);
        check_same_group(*dx.gset, dga.graded_algebra->grp, key_at(where, "gset"));
        std::size_t point = 0;
        if (const Json* pj = opt_member(decl, "point"))
          point = as_size(*pj, 0, dx.gset->n - 1, key_at(where, "point"));
        canon["point"] = point;
        e.graded_module = suspension_module(*dga.graded_algebra, *dx.gset, point);
        e.graded_module->label = e.name;
      } else {
        throw bad_construct();
      }
      e.label = e.graded_module->label;
      e.report.absorb(check_graded_module(*e.graded_module));

    } else {
      throw ParseError(key_at(where, "kind"), "unknown kind '" + e.kind + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    // construction refused the data; the declaration still loads, as invalid
    e.report.issues.push_back(ex.what());
  }

  if (e.report.subject.empty()) e.report.subject = e.label;
  e.valid = e.constructed() && e.report.ok();
  e.canonical = std::move(canon);
  reg.index.emplace(e.name, reg.entries.size());
  reg.entries.push_back(std::move(e));
}

template <class F>
void parse_command(Registry<F>& reg, const Json& j, const std::string& where) {
  using namespace regio;
  expect_keys(j, {"cmd", "targets"}, where);
  Command c;
  c.cmd = as_string(member(j, "cmd", where), key_at(where, "cmd"));
  bool known = false;
  for (const auto& n : command_names())
    if (n == c.cmd) { known = true; break; }
  if (!known) throw ParseError(key_at(where, "cmd"), "unknown command '" + c.cmd + "'");
  if (const Json* tj = opt_member(j, "targets")) {
    auto wt = key_at(where, "targets");
    if (!tj->is_array()) throw ParseError(wt, "expected an array of structure names");
    for (std::size_t i = 0; i < tj->size(); ++i) {
      auto name = as_string((*tj)[i], idx_at(wt, i));
      if (!reg.find(name)) throw ParseError(idx_at(wt, i), "dangling reference '" + name + "'");
      c.targets.push_back(std::move(name));
    }
  }
  reg.commands.push_back(std::move(c));
}

template <class F>
Registry<F> parse_document(F f, const Json& doc) {
  using namespace regio;
  if (!doc.is_object()) throw ParseError("document", "expected a top-level object");
  expect_keys(doc, {"structures", "commands"}, "document");
  Registry<F> reg{f, {}, {}, {}};
  if (const Json* sj = opt_member(doc, "structures")) {
    if (!sj->is_array()) throw ParseError("structures", "expected an array");
    for (std::size_t i = 0; i < sj->size(); ++i)
      parse_structure(reg, (*sj)[i], idx_at("structures", i));
  }
  if (const Json* cj = opt_member(doc, "commands")) {
    if (!cj->is_array()) throw ParseError("commands", "expected an array");
    for (std::size_t i = 0; i < cj->size(); ++i)
      parse_command(reg, (*cj)[i], idx_at("commands", i));
  }
  return reg;
}

template <class F>
Registry<F> parse_input(F f, const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("input", ex.what());
  }
  return parse_document(f, doc);
}

template <class F>
Json serialize_registry(const Registry<F>& reg) {
  Json doc = Json::object();
  Json st = Json::array();
  for (const auto& e : reg.entries) st.push_back(e.canonical);
  doc["structures"] = std::move(st);
  Json cs = Json::array();
  for (const auto& c : reg.commands) {
    Json j = Json::object();
    j["cmd"] = c.cmd;
    j["targets"] = c.targets;
    cs.push_back(std::move(j));
  }
  doc["commands"] = std::move(cs);
  return doc;
}

inline std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace corings
