#pragma once

// Canonical JSON formats. Key order is fixed (ordered_json), so serializing a
// parsed value reproduces the canonical bytes.
//
//   complex:       {"ring": "zpsq:2", "ranks": [1, 1], "differentials": [[[[0,1]]]]}
//                  differentials[n-1] is d_n as rows of [a, b] entry pairs.
//   chain map:     {"source": <complex>, "target": <complex>, "mats": [<matrix>, ...]}
//   decomposition: {"intervals": [[i, j, multiplicity], ...], "disks": [[n, multiplicity], ...]}
//   verdict:       {"holds": true, "rule": "lex", "minPairA": [0,1], "minPairX": [0,2]}

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cellx/complex.hpp"
#include "cellx/lattice.hpp"
#include "cellx/ops.hpp"
#include "cellx/oracle.hpp"
#include "cellx/reduce.hpp"

namespace cellx {

using Json = nlohmann::ordered_json;

enum class OutputMode { Compact, Pretty, Explain };

std::string dump(const Json& j, OutputMode mode = OutputMode::Compact);

struct ParseOptions {
  // Used when the document has no "ring"; must agree with it otherwise.
  std::optional<RingSpec> ring;
  // Accept complexes (and chain maps) that break d∘d = 0 or commutation.
  bool force = false;
};

Json to_json(const RingElement& x);
Json to_json(const MatrixR& m);
Json to_json(const ChainComplex& x);
Json to_json(const ChainMap& f);
Json to_json(const Decomposition& d);
Json to_json(const Verdict& v);
Json to_json(const std::vector<ModuleDescriptor>& homology);
Json to_json(const HomComplex& h);
Json to_json(const Minimization& m);

// Malformed structure, out-of-range entries, shape mismatches and (without
// force) d∘d != 0 throw InvalidComplex. A missing ring or a ring that
// disagrees with opts.ring throws UsageError.
ChainComplex complex_from_json(const Json& j, const ParseOptions& opts = {});
ChainMap chain_map_from_json(const Json& j, const ParseOptions& opts = {});
Decomposition decomposition_from_json(const Json& j);

// {"pair": [..], "latticeVerdict": .., "oracleVerdict": .., "agree": .., "seed": ..}
Json agreement_entry(const std::string& label_x, const std::string& label_a,
                     const CrossCheck& c, std::uint64_t seed);

}  // namespace cellx
