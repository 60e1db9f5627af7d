#include "klab/json_io.hpp"

#include <string>

#include "klab/error.hpp"

namespace klab::io {

json int_json(const Int& v) { return json(to_decimal(v)); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw domain_error("not a decimal integer: " + j.dump());
    }
  }
  throw domain_error("expected integer or decimal string, got " + j.dump());
}

namespace {

json int_array(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

std::vector<Int> int_array_from(const json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

}  // namespace

json to_json(const clifford::CNormalForm& g) {
  return json{{"b", g.b}, {"indices", int_array(g.indices)}};
}

clifford::CNormalForm cnf_from_json(const json& j) {
  clifford::CNormalForm g;
  g.b = j.at("b").get<int>() & 1;
  g.indices = int_array_from(j.at("indices"));
  return g;
}

json to_json(const clifford::ApplicationCount& c) {
  return json{{"square", c.square},
              {"j_central", c.j_central},
              {"anticommute", c.anticommute},
              {"j_square", c.j_square},
              {"total", c.total()}};
}

json to_json(const kgroup::K0NormalForm& nf) {
  return json{
      {"a", int_json(nf.a)}, {"b", nf.b}, {"indices", int_array(nf.indices)}};
}

kgroup::K0NormalForm k0nf_from_json(const json& j) {
  kgroup::K0NormalForm nf;
  nf.a = int_from_json(j.at("a"));
  nf.b = j.at("b").get<int>() & 1;
  nf.indices = int_array_from(j.at("indices"));
  return nf;
}

json to_json(const kgroup::BrittonForm& f) {
  json segs = json::array();
  for (std::size_t i = 0; i < f.w.size(); ++i) {
    segs.push_back(to_json(f.w[i]));
    if (i < f.c.size()) segs.push_back(json{{"t", f.c[i]}});
  }
  return json{{"segments", segs}};
}

json to_json(const kgroup::ReductionTrace& tr) {
  json bits(tr.max_bit_length_history);
  return json{{"pinch_steps", tr.pinch_steps},
              {"max_bits", bits},
              {"comparisons", tr.comparisons},
              {"micros", tr.micros}};
}

json to_json(const mat::CMat& m) {
  json data = json::array();
  for (const mat::cd& v : m.a) data.push_back(json{v.real(), v.imag()});
  return json{{"rows", m.rows}, {"cols", m.cols}, {"data", data}};
}

mat::CMat cmat_from_json(const json& j) {
  auto rows = j.at("rows").get<std::size_t>();
  auto cols = j.at("cols").get<std::size_t>();
  mat::CMat m(rows, cols);
  const json& data = j.at("data");
  if (data.size() != rows * cols)
    throw domain_error("matrix data size mismatch");
  for (std::size_t i = 0; i < m.a.size(); ++i)
    m.a[i] = mat::cd(data[i].at(0).get<double>(), data[i].at(1).get<double>());
  return m;
}

json to_json(const rep::HomTable& t) {
  json entries = json::array();
  for (const clifford::CNormalForm& g : clifford::enumerate_group(t.n))
    entries.push_back(json{{"element", to_json(g)},
                           {"matrix", to_json(t.at(g))}});
  return json{{"n", t.n}, {"d", t.d}, {"entries", entries}};
}

rep::HomTable table_from_json(const json& j) {
  rep::HomTable t;
  t.n = j.at("n").get<int>();
  t.d = j.at("d").get<std::size_t>();
  t.e.resize(std::size_t(1) << (t.n + 1));
  for (const auto& entry : j.at("entries")) {
    clifford::CNormalForm g = cnf_from_json(entry.at("element"));
    mat::CMat m = cmat_from_json(entry.at("matrix"));
    if (m.rows != t.d || m.cols != t.d)
      throw domain_error("table entry dimension mismatch");
    t.e[clifford::element_index(g, t.n)] = std::move(m);
  }
  for (const mat::CMat& m : t.e)
    if (m.rows == 0) throw domain_error("table is missing elements");
  return t;
}

json to_json(const rep::Verdict& v) {
  return json{{"hypothesis", v.hypothesis},
              {"bound", int_json(v.bound)},
              {"consistent", v.consistent}};
}

json to_json(const rep::HlpResult& r) {
  json j{{"n", int_json(r.n)}};
  j["d_min"] = r.d_min_materialized ? int_json(r.d_min) : json(nullptr);
  j["d_min_materialized"] = r.d_min_materialized;
  j["log2_d_min"] = r.log2_d_min;
  j["alpha"] = r.alpha;
  j["C"] = r.C;
  j["Cprime"] = r.Cprime;
  j["guarantee"] = r.guarantee;
  return j;
}

json to_json(const rep::SearchReport& r) {
  json traj = json::array();
  for (const auto& [defect, deltaJ] : r.trajectory)
    traj.push_back(json{{"defect", defect}, {"deltaJ", deltaJ}});
  return json{{"n", r.n},
              {"d", r.d},
              {"iterations", r.iterations},
              {"seed", r.seed},
              {"best_defect", r.best_defect},
              {"best_deltaJ", r.best_deltaJ},
              {"best_objective", r.best_objective},
              {"trajectory", traj},
              {"consistent", r.consistent}};
}

}  // namespace klab::io
