#include "cellx/io.hpp"

#include <map>

#include "cellx/errors.hpp"

namespace cellx {

namespace {

[[noreturn]] void malformed(const std::string& what, int degree = -1) {
  throw InvalidComplex(what, degree);
}

RingSpec resolve_ring(const Json& j, const ParseOptions& opts) {
  if (!j.contains("ring")) {
    if (!opts.ring) throw UsageError("input has no \"ring\" and no --ring was given");
    return *opts.ring;
  }
  if (!j["ring"].is_string()) malformed("\"ring\" must be a string");
  const RingSpec file_ring = RingSpec::parse(j["ring"].get<std::string>());
  if (opts.ring && !(*opts.ring == file_ring))
    throw UsageError("--ring " + opts.ring->to_string() + " disagrees with the file's ring " +
                     file_ring.to_string());
  return file_ring;
}

RingElement entry_from_json(const Json& j, const RingSpec& ring, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    malformed(where + ": entries must be [a, b] integer pairs");
  const auto a = j[0].get<std::int64_t>(), b = j[1].get<std::int64_t>();
  if (a < 0 || a >= ring.p() || b < 0 || b >= ring.p())
    malformed(where + ": entry [" + std::to_string(a) + "," + std::to_string(b) +
              "] is outside [0, " + std::to_string(ring.p()) + ")");
  return ring.element(a, b);
}

MatrixR matrix_from_json(const Json& j, const RingSpec& ring, std::size_t rows, std::size_t cols,
                         const std::string& where, int degree) {
  if (!j.is_array()) malformed(where + " must be an array of rows", degree);
  // A matrix with no rows is written [] whatever its column count.
  if (rows == 0) {
    if (!j.empty()) malformed(where + " must have 0 rows", degree);
    return MatrixR(ring, 0, cols);
  }
  if (j.size() != rows)
    malformed(where + " must have " + std::to_string(rows) + " rows, has " +
                  std::to_string(j.size()),
              degree);
  MatrixR m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      malformed(where + " row " + std::to_string(r) + " must have " + std::to_string(cols) +
                    " entries",
                degree);
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry_from_json(j[r][c], ring, where));
  }
  return m;
}

}  // namespace

std::string dump(const Json& j, OutputMode mode) {
  return mode == OutputMode::Compact ? j.dump() : j.dump(2);
}

Json to_json(const RingElement& x) { return Json::array({x.a(), x.b()}); }

Json to_json(const MatrixR& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ChainComplex& x) {
  Json j;
  j["ring"] = x.ring().to_string();
  j["ranks"] = x.ranks();
  Json diffs = Json::array();
  for (const auto& d : x.differentials()) diffs.push_back(to_json(d));
  j["differentials"] = std::move(diffs);
  return j;
}

Json to_json(const ChainMap& f) {
  Json j;
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  Json mats = Json::array();
  for (const auto& m : f.mats()) mats.push_back(to_json(m));
  j["mats"] = std::move(mats);
  return j;
}

Json to_json(const Decomposition& d) {
  std::map<Interval, std::size_t> ivs;
  for (const auto& iv : d.intervals) ++ivs[iv];
  std::map<int, std::size_t> disks;
  for (int n : d.disks) ++disks[n];
  Json j;
  j["intervals"] = Json::array();
  for (const auto& [iv, mult] : ivs) j["intervals"].push_back({iv.start, iv.span, mult});
  j["disks"] = Json::array();
  for (const auto& [n, mult] : disks) j["disks"].push_back({n, mult});
  return j;
}

Json to_json(const Verdict& v) {
  auto pair = [](const std::optional<Interval>& iv) -> Json {
    if (!iv) return nullptr;
    return Json::array({iv->start, iv->span});
  };
  auto bottom = [](const std::optional<int>& b) -> Json {
    if (!b) return nullptr;
    return *b;
  };
  Json j;
  j["holds"] = v.holds;
  j["rule"] = v.rule;
  if (v.rule == "support" || v.bottom_x || v.bottom_a) {
    j["bottomA"] = bottom(v.bottom_a);
    j["bottomX"] = bottom(v.bottom_x);
  } else {
    j["minPairA"] = pair(v.min_pair_a);
    j["minPairX"] = pair(v.min_pair_x);
  }
  return j;
}

Json to_json(const std::vector<ModuleDescriptor>& homology) {
  Json list = Json::array();
  for (const auto& h : homology) {
    Json e;
    e["free"] = h.free_rank;
    e["residue"] = h.residue_rank;
    list.push_back(std::move(e));
  }
  return list;
}

Json to_json(const HomComplex& h) {
  Json j;
  j["complex"] = to_json(h.complex);
  j["degree0Free"] = h.degree0_free;
  j["degree0"] = {{"free", h.degree0.free_rank}, {"residue", h.degree0.residue_rank}};
  j["boundaryImage"] = {{"base", h.complex.ring().p()}, {"exponent", h.boundary_image_log}};
  return j;
}

Json to_json(const Minimization& m) {
  Json j;
  j["minimal"] = to_json(m.minimal);
  std::map<int, std::size_t> disks;
  for (int n : m.disks) ++disks[n];
  j["disks"] = Json::array();
  for (const auto& [n, mult] : disks) j["disks"].push_back({n, mult});
  Json certs = Json::array();
  for (const auto& bc : m.basis_change) certs.push_back(to_json(bc.forward));
  j["basisChange"] = std::move(certs);
  return j;
}

ChainComplex complex_from_json(const Json& j, const ParseOptions& opts) {
  if (!j.is_object()) malformed("complex must be a JSON object");
  const RingSpec ring = resolve_ring(j, opts);
  if (!j.contains("ranks") || !j["ranks"].is_array()) malformed("complex needs a \"ranks\" array");
  std::vector<std::size_t> ranks;
  for (const auto& r : j["ranks"]) {
    if (!r.is_number_integer() || r.get<std::int64_t>() < 0)
      malformed("ranks must be non-negative integers");
    ranks.push_back(r.get<std::size_t>());
  }
  const Json diffs_json = j.contains("differentials") ? j["differentials"] : Json::array();
  if (!diffs_json.is_array()) malformed("\"differentials\" must be an array");
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (diffs_json.size() != expected)
    malformed("expected " + std::to_string(expected) + " differentials, got " +
              std::to_string(diffs_json.size()));
  std::vector<MatrixR> diffs;
  for (std::size_t n = 1; n < ranks.size(); ++n)
    diffs.push_back(matrix_from_json(diffs_json[n - 1], ring, ranks[n - 1], ranks[n],
                                     "d_" + std::to_string(n), static_cast<int>(n)));
  ChainComplex x(ring, std::move(ranks), std::move(diffs));
  if (!opts.force) require_valid(x);
  return x;
}

ChainMap chain_map_from_json(const Json& j, const ParseOptions& opts) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("mats"))
    malformed("chain map needs \"source\", \"target\" and \"mats\"");
  ChainComplex source = complex_from_json(j["source"], opts);
  ChainComplex target = complex_from_json(j["target"], opts);
  if (!(source.ring() == target.ring())) throw UsageError("chain map source and target rings differ");
  const Json& mats_json = j["mats"];
  const int degrees = std::max(source.length(), target.length());
  if (!mats_json.is_array() || mats_json.size() != static_cast<std::size_t>(degrees))
    malformed("chain map needs " + std::to_string(degrees) + " matrices in \"mats\"");
  std::vector<MatrixR> mats;
  for (int n = 0; n < degrees; ++n)
    mats.push_back(matrix_from_json(mats_json[n], source.ring(), target.rank(n), source.rank(n),
                                    "f_" + std::to_string(n), n));
  ChainMap f(std::move(source), std::move(target), std::move(mats));
  if (!opts.force)
    if (auto diag = f.check_commutes()) malformed(diag->message, diag->degree);
  return f;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  for (const auto& e : j.at("intervals")) {
    const auto mult = e.at(2).get<std::size_t>();
    for (std::size_t k = 0; k < mult; ++k) d.intervals.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  for (const auto& e : j.at("disks")) {
    const auto mult = e.at(1).get<std::size_t>();
    for (std::size_t k = 0; k < mult; ++k) d.disks.push_back(e.at(0).get<int>());
  }
  std::sort(d.intervals.begin(), d.intervals.end());
  std::sort(d.disks.begin(), d.disks.end());
  return d;
}

Json agreement_entry(const std::string& label_x, const std::string& label_a, const CrossCheck& c,
                     std::uint64_t seed) {
  Json j;
  j["pair"] = Json::array({label_x, label_a});
  j["latticeVerdict"] = c.lattice;
  j["oracleVerdict"] = c.oracle;
  j["agree"] = c.agree;
  j["route"] = c.route;
  j["seed"] = seed;
  return j;
}

}  // namespace cellx
