#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/hodge.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/perimeter.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ribbon_map.hpp"
#include "hurwitz/toda.hpp"
#include "hurwitz/tree_stats.hpp"
#include "hurwitz/wick.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

// Rationals as {"num": "...", "den": "..."} with decimal strings.
void to_json(Json& j, const Rat& r);
void from_json(const Json& j, Rat& r);
void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);
void to_json(Json& j, const Correlator& c);
void from_json(const Json& j, Correlator& c);
void to_json(Json& j, const HodgeTable& t);
void from_json(const Json& j, HodgeTable& t);
void to_json(Json& j, const RibbonMap& m);
void from_json(const Json& j, RibbonMap& m);
void to_json(Json& j, const MapClass& m);
void from_json(const Json& j, MapClass& m);
void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);
void to_json(Json& j, const StatReport& r);
void from_json(const Json& j, StatReport& r);
void to_json(Json& j, const LaplaceEstimate& e);
void from_json(const Json& j, LaplaceEstimate& e);
void to_json(Json& j, const TruncatedSeries& s);
void from_json(const Json& j, TruncatedSeries& s);
void to_json(Json& j, const TodaResidual& r);
void from_json(const Json& j, TodaResidual& r);

struct HurwitzFixture {
  int genus = 0;
  Partition mu;
  Rat value;
};

// Correlators exactly as tabulated; <lambda_1>_1 appears with no points.
struct HodgeFixture {
  Correlator correlator;
  Rat value;
};

struct AppendixTables {
  std::vector<HodgeFixture> hodge;
  std::vector<HurwitzFixture> hurwitz;
};

// Raw embedded text and its parsed form.
const char* appendix_b_json();
const AppendixTables& appendix_b();

}  // namespace hurwitz
