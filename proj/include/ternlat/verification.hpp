#pragma once
// Turns catalog expectations (data/catalog.json) into pass/fail reports:
// determinants, integrality/evenness/unimodularity, minimum norms, kissing
// numbers, theta prefixes, and fingerprint comparison between lattices.
#include "ternlat/catalog.hpp"
#include "ternlat/enumerate.hpp"

namespace ternlat {

// Claim tiers. Structural claims (rank, det, evenness, unimodularity, code
// facts) are always evaluated; each deeper level strictly adds enumeration
// claims. Claims marked extended in the data file run only at `extended`.
enum class Depth { structural, shallow, deep, extended };
Depth depth_from_string(const std::string& s);
std::string depth_to_string(Depth d);
// deep for rank <= 26, shallow for 27..32, structural above.
Depth default_depth_for_rank(size_t rank);

// Expected invariants of one catalog entry, parsed from data/catalog.json.
// Optional fields absent when the data file omits them; `tag` is the
// provenance marker carried verbatim ("PAPER" or "DERIVED").
struct CatalogExpectation {
  std::string name;
  size_t rank = 0;
  std::string paperRef;
  Rat scaleSquared;
  std::string note;

  std::optional<Rat> detGram;
  std::string detTag;
  std::optional<Rat> minNorm;  // unscaled (construction scale)
  std::string minTag;
  std::optional<uint64_t> kissing;
  std::string kissingTag;
  bool kissingExtended = false;
  std::optional<Rat> centerDensitySquared;
  std::string cd2Tag;
  std::optional<bool> even;
  std::string evenTag;
  std::optional<bool> unimodular;
  std::string unimodularTag;
  std::optional<std::pair<Rat, uint64_t>> secondLayer;  // scaled norm, count
  std::string secondLayerTag;
  std::vector<std::pair<Rat, uint64_t>> thetaPrefix;  // scaled norms
  Rat thetaMaxScaled;
  std::string thetaTag;
  std::optional<bool> supportConditions;  // 48-dim entry only
  std::string supportTag;
  // kissing = base + perA18 * A18 of the backing code (40-dim entry only).
  std::optional<std::pair<uint64_t, uint64_t>> kissingFormula;
};

CatalogExpectation catalog_expectation(const std::string& name);
std::vector<CatalogExpectation> catalog_expectations();

struct ClaimResult {
  std::string id;        // "det_gram", "min_norm", ...
  std::string tag;       // provenance of the expectation
  std::string expected;
  std::string computed;  // empty when skipped
  bool pass = false;
  bool skipped = false;  // beyond the requested depth / marked extended
  double seconds = 0.0;
};

struct VerificationReport {
  std::string name;
  Depth depth = Depth::structural;
  bool buildError = false;
  std::string error;
  std::vector<ClaimResult> claims;
};

// True iff no non-skipped claim failed (build errors count as failure).
bool report_passed(const VerificationReport& r);

// Evaluates the entry's claims up to `depth`; deeper claims are reported
// with skipped status. Builder failures yield a buildError report rather
// than throwing; unknown names throw std::out_of_range.
VerificationReport verify(const std::string& name, Depth depth);

// All entries whose name or dimension matches the filter: "" or "all" for
// everything, "dim=N" / "dim<=N" / "dim>=N", otherwise a name substring.
std::vector<VerificationReport> run_all(Depth depth,
                                        const std::string& filter = "");

// Exit-code contract: 0 all pass/skip, 1 any failed claim, 2 any build error.
int reports_exit_code(const std::vector<VerificationReport>& reports);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_table(const std::vector<VerificationReport>& reports);

// Cheap invariant bundle standing in for isometry tests: equal lattices have
// equal fingerprints; unequal fingerprints certify non-isometry. Equality of
// fingerprints is inconclusive.
struct Fingerprint {
  size_t rank = 0;
  Rat detGram;  // scaled by scaleSquared^rank
  std::vector<std::pair<Rat, uint64_t>> thetaPrefix;  // scaled norms
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const WeightedLattice& l, const Rat& scaleSquared,
                        const Rat& maxScaledNorm = Rat(12));

}  // namespace ternlat
