#pragma once

/// The sixteen known integer triangles with integer R/r for N <= 999,
/// including the N = 2 equilateral row (whose curve is singular and which is
/// therefore excluded from the search machinery).

#include <vector>

#include "rrn/triangle.hpp"

namespace rrn {

struct KnownTriangle {
    Integer n;
    Triple sides;
};

inline const std::vector<KnownTriangle>& known_triangles() {
    static const std::vector<KnownTriangle> rows = {
        {2, {1, 1, 1}},
        {26, {11, 39, 49}},
        {74, {259, 475, 729}},
        {218, {115, 5239, 5341}},
        {250, {97, 10051, 10125}},
        {314, {Integer("177487799"), Integer("55017780825"),
               Integer("55036428301")}},
        {386, {Integer("1449346321141"), Integer("2477091825117"),
               Integer("3921344505997")}},
        {394, {12017, 2356695, 2365193}},
        {458, {395, 100989, 101251}},
        {586, {3809, 18411, 22201}},
        {602, {833, 14703, 15523}},
        {634, {Integer("10553413"), Integer("1234267713"),
               Integer("1243789375")}},
        {674, {535, 170471, 170859}},
        {746, {Integer("47867463"), Integer("6738962807"),
               Integer("6782043733")}},
        {778, {Integer("1224233861981"), Integer("91266858701995"),
               Integer("92430153628659")}},
        {866, {3025, 5629, 8649}},
    };
    return rows;
}

/// The near-equilateral example for M = 89 with ratio 2 + 1/89.
inline const KnownTriangle& near_eq_m89() {
    static const KnownTriangle t = {
        89,
        {Integer("10188073747943"), Integer("10937217961673"),
         Integer("11065215566304")}};
    return t;
}

}  // namespace rrn
