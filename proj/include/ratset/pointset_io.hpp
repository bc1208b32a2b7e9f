/**
 * @file pointset_io.hpp
 * @brief The JSON exchange format for point sets.
 *
 * Layout:
 *   { "dim": 2,
 *     "meta": { "generator": "circle-gen", "bound": "5" },
 *     "points": [["1", "0"], ["-7/25", "24/25"]] }
 *
 * Rationals are always strings under the grammar -?[0-9]+(/[0-9]+)?, never
 * floats; writing emits the canonical reduced form with positive
 * denominator, so write-then-read reproduces the set exactly and identical
 * sets serialize to identical bytes.
 */
#pragma once

#include "ratset/exact_core.hpp"

#include <iosfwd>
#include <string>

namespace ratset {

PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

std::string point_set_to_json(const PointSet& s);
void write_point_set(const PointSet& s, std::ostream& out);
void write_point_set_file(const PointSet& s, const std::string& path);

}  // namespace ratset
