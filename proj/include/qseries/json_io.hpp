#pragma once

#include <json.hpp>

#include "qseries/polynomial.hpp"
#include "qseries/prodconv.hpp"
#include "qseries/qseries.hpp"
#include "qseries/relations.hpp"

// Structured records. Rationals are written as strings ("-3/4") so that no
// precision is lost.

namespace qseries {

using Json = nlohmann::ordered_json;

Json to_json(const QSeries& s);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const QProduct& p);
Json to_json(const EtaProduct& p);
Json to_json(const JacProduct& p);
Json to_json(const PochhammerProduct& p);
Json to_json(const MonomialBasis& b);
Json to_json(const Relation& r);
Json to_json(const ComboResult& c);

/// Inverse of to_json(QSeries); throws ParseError on malformed records.
QSeries series_from_json(const Json& j);

}  // namespace qseries
