#pragma once

// Worked examples used both by the unit tests and by the acceptance run.

#include <string>
#include <utility>
#include <vector>

namespace goursat::fixtures {

using Rows = std::vector<std::vector<int>>;

// Rows h = 2..19, columns i = 2..min(h, 7).
inline const Rows kETableRRVTVV = {
    {0},
    {0, 0},
    {0, 0, 1},
    {0, 0, 0, 3},
    {0, 0, 0, 2, 5},
    {0, 0, 0, 1, 4, 12},
    {0, 0, 0, 0, 3, 11},
    {0, 0, 0, 0, 2, 10},
    {0, 0, 0, 0, 1, 9},
    {0, 0, 0, 0, 0, 8},
    {0, 0, 0, 0, 0, 7},
    {0, 0, 0, 0, 0, 6},
    {0, 0, 0, 0, 0, 5},
    {0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 3},
    {0, 0, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0},
};
inline const std::vector<int> kSgRRVTVV = {3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8};

inline const Rows kETableRRRVV = {
    {0}, {0, 0}, {0, 0, 1}, {0, 0, 0, 3}, {0, 0, 0, 2, 5},
    {0, 0, 0, 1, 4}, {0, 0, 0, 0, 3}, {0, 0, 0, 0, 2}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0},
};
inline const std::vector<int> kSgRRRVV = {3, 4, 4, 5, 5, 5, 6, 6, 6, 7};

// Brackets on chart ooioii: rows v0..v6, f0..f6 against columns f0..f6.
inline const std::vector<std::vector<std::string>> kBracketOoioii = {
    {"0", "0", "0", "0", "0", "0", "0"},
    {"0", "v0", "v0", "n3*v0", "n3*v0", "n3*n5*v0", "n3*n5*n6*v0"},
    {"0", "0", "v1", "n3*v1", "n3*v1", "n3*n5*v1", "n3*n5*n6*v1"},
    {"0", "0", "0", "f2", "f2", "n5*f2", "n5*n6*f2"},
    {"0", "0", "0", "0", "v3", "n5*v3", "n5*n6*v3"},
    {"0", "0", "0", "0", "0", "f4", "n6*f4"},
    {"0", "0", "0", "0", "0", "0", "f5"},
    {"0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "-n2*v0", "-n2*n3*v0", "-n2*n3*v0", "-n2*n3*n5*v0", "-n2*n3*n5*n6*v0"},
    {"0", "n2*v0", "0", "-v1", "-v1", "-n5*v1", "-n5*n6*v1"},
    {"0", "n2*n3*v0", "v1", "0", "-n4*f2", "-n4*n5*f2", "-n4*n5*n6*f2"},
    {"0", "n2*n3*v0", "v1", "n4*f2", "0", "-v3", "-n6*v3"},
    {"0", "n2*n3*n5*v0", "n5*v1", "n4*n5*f2", "v3", "0", "-f4"},
    {"0", "n2*n3*n5*n6*v0", "n5*n6*v1", "n4*n5*n6*f2", "n6*v3", "f4", "0"},
};

// g_0..g_7 on ooioii as sign * generator, with the divisor of [g0, g_i].
inline const std::vector<int> kGSignOoioii = {1, 1, -1, -1, -1, 1, 1, -1};
inline const std::vector<std::string> kGGenOoioii = {"f6", "v6", "f5", "f4", "v3", "f2", "v1", "v0"};
inline const std::vector<std::string> kGDivisorOoioii = {"1", "1", "1", "1", "n6", "n5*n6", "n5*n6", "n3*n5*n6"};

// Focal orders at the canonical points, by coordinate name.
inline const std::vector<std::pair<std::string, long>> kFocalRRVRVV = {
    {"x''", 0}, {"y''", 3}, {"x'", 3}, {"x", 6}, {"y'", 9}, {"y", 15}};
inline const std::vector<std::pair<std::string, long>> kFocalRRVTVV = {
    {"x''", 2}, {"y''", 3}, {"x'", 5}, {"x", 8}, {"y'", 11}, {"y", 19}};

// VO_2..VO_k at the canonical point.
inline const std::vector<std::pair<std::string, std::vector<int>>> kVerticalOrders = {
    {"RRVRVV", {0, 3, 0, 1, 1}}, {"RVVVRVT", {6, 3, 3, 0, 2, 0}}};

// Column i = 7 of the pathway for RRVTVV: tracked term, its focal order
// and whether it came from [g0, .] ('0'), [g1, .] ('1') or the start ('-').
inline const std::vector<std::pair<std::string, long>> kPathwayRRVTVV7 = {
    {"g3", 0},
    {"n6*g4", 1},
    {"n5*n6^2*g5", 3},
    {"n5^2*n6^3*g6", 5},
    {"n3*n5^3*n6^4*g7", 12},
    {"4*n3*n5^3*n6^3*g7", 11},
    {"12*n3*n5^3*n6^2*g7", 10},
    {"24*n3*n5^3*n6*g7", 9},
    {"24*n3*n5^3*g7", 8},
    {"24*n4*n5^4*n6*g7", 7},
    {"24*n4*n5^4*g7", 6},
    {"24*n5^4*n6*g7", 5},
    {"24*n5^4*g7", 4},
    {"96*n5^3*g7", 3},
    {"288*n5^2*g7", 2},
    {"576*n5*g7", 1},
    {"576*g7", 0},
};
inline const std::string kPathwayRRVTVV7Via = "-0000111101010000";

inline const std::string kRecursionWord = "RRVTRRRVTTTV";
// der of each prefix of kRecursionWord of length 2..12.
inline const Rows kDerPrefixes = {
    {1, 1},
    {1, 1, 2},
    {1, 1, 1, 3},
    {1, 1, 1, 1, 3},
    {1, 1, 1, 1, 1, 3},
    {1, 1, 1, 1, 1, 1, 3},
    {1, 1, 2, 2, 2, 2, 2, 6},
    {1, 1, 1, 3, 3, 3, 3, 3, 9},
    {1, 1, 1, 1, 4, 4, 4, 4, 4, 12},
    {1, 1, 1, 1, 1, 5, 5, 5, 5, 5, 15},
    {1, 1, 2, 2, 2, 2, 9, 9, 9, 9, 9, 27},
};
// Words on the lift chain of kRecursionWord with their der vectors.
inline const std::vector<std::pair<std::string, std::vector<int>>> kDerLiftChain = {
    {"RR", {1, 1}},
    {"RRV", {1, 1, 2}},
    {"RRRRRV", {1, 1, 2, 2, 2, 2}},
    {"RRVTTTV", {1, 1, 2, 2, 2, 2, 9}},
    {"RRRRRRVTTTV", {1, 1, 2, 2, 2, 2, 9, 9, 9, 9, 9}},
    {"RRVTRRRVTTTV", {1, 1, 2, 2, 2, 2, 9, 9, 9, 9, 9, 27}},
};

}  // namespace goursat::fixtures
