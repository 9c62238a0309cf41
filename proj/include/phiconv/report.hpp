#pragma once

#include <string>

#include "json.hpp"
#include "phiconv/intersect.hpp"
#include "phiconv/saddle.hpp"
#include "phiconv/variational.hpp"

namespace phiconv {

// Report serialization. Field order is fixed (ordered_json) and doubles
// serialize in exact shortest-round-trip form, so identical inputs produce
// byte-identical reports.
using Report = nlohmann::ordered_json;

Report to_report(const Vector& v);
Report to_report(const QuadMinorant& phi);
Report to_report(const IPDecision& d);
Report to_report(const BRResult& r);
Report to_report(const SaddleValues& v);
Report to_report(const IPWitness& w);

// Flag-style rendering "a,l1,...,c" that parse_minorant accepts back.
std::string minorant_flag(const QuadMinorant& phi);
std::string vector_flag(const Vector& v);

}  // namespace phiconv
