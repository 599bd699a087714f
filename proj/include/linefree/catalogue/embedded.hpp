#pragma once

// Built-in catalogues: the sporadic simplicial arrangements up to 27 lines
// (combinatorics and published values only) and a few small realizations
// used as test fixtures.

#include "linefree/catalogue/format.hpp"

namespace linefree {

namespace detail {

inline constexpr const char* sporadic_table_text = R"cat(# name, t-vector and the published mu / discriminant sign / roots
arrangement A(7,1)
lines 7
tvector 3 6
expected mu 27
expected disc pos
expected roots 0 2
end

arrangement A(9,1)
lines 9
tvector 6 4 3
expected mu 49
expected disc pos
expected roots real
end

arrangement A(10,2)
lines 10
tvector 6 7 3
expected mu 61
expected disc pos
expected roots real
end

arrangement A(10,3)
lines 10
tvector 6 7 3
expected mu 61
expected disc pos
expected roots real
end

arrangement A(11,1)
lines 11
tvector 7 8 4
expected mu 75
expected disc pos
expected roots 4 6
end

arrangement A(12,2)
lines 12
tvector 8 10 3 1
expected mu 91
expected disc pos
expected roots real
end

arrangement A(12,3)
lines 12
tvector 9 7 6
expected mu 91
expected disc pos
expected roots real
end

arrangement A(13,2)
lines 13
tvector 12 4 9
expected mu 109
expected disc pos
expected roots real
end

arrangement A(13,3)
lines 13
tvector 10 10 3 2
expected mu 109
expected disc pos
expected roots real
end

arrangement A(13,4)
lines 13
tvector 6 18 3
expected mu 105
expected disc neg
expected roots complex
end

arrangement A(14,2)
lines 14
tvector 11 12 4 2
expected mu 127
expected disc pos
expected roots real
end

arrangement A(14,3)
lines 14
tvector 9 16 4 1
expected mu 125
expected disc neg
expected roots complex
end

arrangement A(14,4)
lines 14
tvector 10 14 4 0 1
expected mu 127
expected disc pos
expected roots real
end

arrangement A(15,1)
lines 15
tvector 15 10 0 6
expected mu 151
expected disc pos
expected roots real
end

arrangement A(15,2)
lines 15
tvector 13 12 6 2
expected mu 147
expected disc pos
expected roots 6 8
end

arrangement A(15,3)
lines 15
tvector 12 13 9
expected mu 145
expected disc neg
expected roots complex
end

arrangement A(15,4)
lines 15
tvector 12 14 6 0 1
expected mu 147
expected disc pos
expected roots 6 8
end

arrangement A(15,5)
lines 15
tvector 9 22 0 3
expected mu 145
expected disc neg
expected roots complex
end

arrangement A(16,2)
lines 16
tvector 14 15 6 1 1
expected mu 169
expected disc pos
expected roots real
end

arrangement A(16,3)
lines 16
tvector 15 13 6 3
expected mu 169
expected disc pos
expected roots real
end

arrangement A(16,4)
lines 16
tvector 15 15 0 6
expected mu 171
expected disc pos
expected roots real
end

arrangement A(16,5)
lines 16
tvector 14 16 3 4
expected mu 169
expected disc pos
expected roots real
end

arrangement A(16,6)
lines 16
tvector 15 12 9 0 1
expected mu 169
expected disc pos
expected roots real
end

arrangement A(16,7)
lines 16
tvector 12 19 6 0 1
expected mu 167
expected disc neg
expected roots complex
end

arrangement A(17,2)
lines 17
tvector 16 16 7 0 2
expected mu 193
expected disc pos
expected roots real
end

arrangement A(17,3)
lines 17
tvector 18 12 7 4
expected mu 193
expected disc pos
expected roots real
end

arrangement A(17,4)
lines 17
tvector 16 16 7 0 2
expected mu 193
expected disc pos
expected roots real
end

arrangement A(17,5)
lines 17
tvector 16 18 1 6
expected mu 193
expected disc pos
expected roots real
end

arrangement A(17,6)
lines 17
tvector 16 15 10 0 1
expected mu 191
expected disc zero
expected roots 8
end

arrangement A(17,7)
lines 17
tvector 13 22 7 0 1
expected mu 189
expected disc neg
expected roots complex
end

arrangement A(17,8)
lines 17
tvector 14 20 7 2
expected mu 189
expected disc neg
expected roots complex
end

arrangement A(18,2)
lines 18
tvector 18 18 6 3 1
expected mu 217
expected disc pos
expected roots real
end

arrangement A(18,3)
lines 18
tvector 19 16 6 5
expected mu 217
expected disc pos
expected roots real
end

arrangement A(18,4)
lines 18
tvector 18 19 3 6
expected mu 217
expected disc pos
expected roots real
end

arrangement A(18,5)
lines 18
tvector 18 19 3 6
expected mu 217
expected disc pos
expected roots real
end

arrangement A(18,6)
lines 18
tvector 18 16 12 0 1
expected mu 215
expected disc neg
expected roots complex
end

arrangement A(18,7)
lines 18
tvector 18 18 6 3 1
expected mu 217
expected disc pos
expected roots real
end

arrangement A(18,8)
lines 18
tvector 16 22 6 2 1
expected mu 215
expected disc neg
expected roots complex
end

arrangement A(19,1)
lines 19
tvector 21 18 6 0 4
expected mu 247
expected disc pos
expected roots real
end

arrangement A(19,2)
lines 19
tvector 21 18 6 6
expected mu 243
expected disc pos
expected roots 8 10
end

arrangement A(19,3)
lines 19
tvector 24 12 6 6 1
expected mu 247
expected disc pos
expected roots real
end

arrangement A(19,4)
lines 19
tvector 20 20 6 4 1
expected mu 243
expected disc pos
expected roots 8 10
end

arrangement A(19,5)
lines 19
tvector 20 20 6 4 1
expected mu 243
expected disc pos
expected roots 8 10
end

arrangement A(19,6)
lines 19
tvector 20 20 6 4 1
expected mu 243
expected disc pos
expected roots 8 10
end

arrangement A(19,7)
lines 19
tvector 21 15 15 0 1
expected mu 241
expected disc neg
expected roots complex
end

arrangement A(20,2)
lines 20
tvector 25 15 10 6
expected mu 271
expected disc pos
expected roots real
end

arrangement A(20,3)
lines 20
tvector 21 24 6 4 0 1
expected mu 271
expected disc pos
expected roots real
end

arrangement A(20,4)
lines 20
tvector 23 20 7 5 1
expected mu 271
expected disc pos
expected roots real
end

arrangement A(20,5)
lines 20
tvector 20 26 4 4 0 0 1
expected mu 273
expected disc pos
expected roots real
end

arrangement A(21,2)
lines 21
tvector 30 10 15 6
expected mu 301
expected disc pos
expected roots real
end

arrangement A(21,3)
lines 21
tvector 24 24 9 0 4
expected mu 301
expected disc pos
expected roots real
end

arrangement A(21,4)
lines 21
tvector 22 28 6 4 0 0 1
expected mu 301
expected disc pos
expected roots real
end

arrangement A(21,5)
lines 21
tvector 26 20 9 4 2
expected mu 301
expected disc pos
expected roots real
end

arrangement A(21,6)
lines 21
tvector 25 20 15 2 1
expected mu 297
expected disc neg
expected roots complex
end

arrangement A(21,7)
lines 21
tvector 24 22 15 3
expected mu 295
expected disc neg
expected roots complex
end

arrangement A(22,2)
lines 22
tvector 24 30 12 3 1
expected mu 325
expected disc neg
expected roots complex
end

arrangement A(22,3)
lines 22
tvector 27 28 0 12
expected mu 331
expected disc pos
expected roots real
end

arrangement A(22,4)
lines 22
tvector 27 25 9 3 3
expected mu 331
expected disc pos
expected roots real
end

arrangement A(22,5)
lines 22
tvector 12 58 0 0 3
expected mu 319
expected disc neg
expected roots complex
end

arrangement A(23,1)
lines 23
tvector 27 32 10 4 2
expected mu 359
expected disc neg
expected roots complex
end

arrangement A(23,2)
lines 23
tvector 16 56 2 0 1 2
expected mu 355
expected disc neg
expected roots complex
end

arrangement A(24,2)
lines 24
tvector 32 32 0 12 0 0 1
expected mu 401
expected disc pos
expected roots real
end

arrangement A(24,3)
lines 24
tvector 31 32 9 5 3
expected mu 395
expected disc neg
expected roots complex
end

arrangement A(24,4)
lines 24
tvector 20 54 4 0 0 2 1
expected mu 393
expected disc neg
expected roots complex
end

arrangement A(25,2)
lines 25
tvector 36 28 15 0 6
expected mu 433
expected disc pos
expected roots real
end

arrangement A(25,3)
lines 25
tvector 30 40 15 6
expected mu 421
expected disc neg
expected roots complex
end

arrangement A(25,4)
lines 25
tvector 36 30 9 6 4
expected mu 433
expected disc pos
expected roots real
end

arrangement A(25,5)
lines 25
tvector 36 32 0 8 4 0 1
expected mu 441
expected disc pos
expected roots real
end

arrangement A(25,6)
lines 25
tvector 36 30 9 6 4
expected mu 433
expected disc pos
expected roots real
end

arrangement A(25,7)
lines 25
tvector 33 34 12 2 3 0 1
expected mu 433
expected disc pos
expected roots real
end

arrangement A(25,8)
lines 25
tvector 24 52 6 0 0 0 3
expected mu 433
expected disc pos
expected roots real
end

arrangement A(26,2)
lines 26
tvector 35 40 10 11
expected mu 461
expected disc neg
expected roots complex
end

arrangement A(26,3)
lines 26
tvector 37 36 9 6 3 1
expected mu 469
expected disc pos
expected roots real
end

arrangement A(26,4)
lines 26
tvector 35 39 10 4 3 0 1
expected mu 469
expected disc pos
expected roots real
end

arrangement A(27,1)
lines 27
tvector 40 40 6 14 1
expected mu 503
expected disc neg
expected roots complex
end

arrangement A(27,2)
lines 27
tvector 39 40 10 6 2 2
expected mu 507
expected disc pos
expected roots 12 14
end

arrangement A(27,3)
lines 27
tvector 39 40 10 6 2 2
expected mu 507
expected disc pos
expected roots 12 14
end

arrangement A(27,4)
lines 27
tvector 38 42 9 6 3 0 1
expected mu 507
expected disc pos
expected roots 12 14
end
)cat";

inline constexpr const char* fixtures_text = R"cat(arrangement triangle
lines 3
line 1 0 0
line 0 1 0
line 0 0 1
end

arrangement near-pencil(4)
lines 4
line 1 0 0
line 0 1 0
line 1 1 0
line 0 0 1
end

arrangement near-pencil(5)
lines 5
line 1 0 0
line 0 1 0
line 1 1 0
line 1 -1 0
line 0 0 1
end

arrangement near-pencil(6)
lines 6
line 1 0 0
line 0 1 0
line 1 1 0
line 1 -1 0
line 1 2 0
line 0 0 1
end

arrangement generic-4
lines 4
line 1 0 0
line 0 1 0
line 0 0 1
line 1 1 1
end

# Same combinatorics as A(7,1).
arrangement non-Fano
lines 7
tvector 3 6
line 1 0 0
line 0 1 0
line 0 0 1
line 1 -1 0
line 1 0 -1
line 0 1 -1
line 1 1 -1
end

# A near-pencil with an irrational slope; exercises Q(sqrt(2)).
arrangement near-pencil-sqrt2(4)
field Qsqrt 2
lines 4
line 1 0 0
line 0 1 0
line 1 -sqrt(2) 0
line 0 0 1
end
)cat";

}  // namespace detail

/// The 78 sporadic simplicial arrangements with up to 27 lines.
inline const CatalogueFile& embedded_table() {
  static const CatalogueFile file = parse_catalogue(detail::sporadic_table_text);
  return file;
}

/// Small exact realizations: triangle, near-pencils on 4 to 6 lines, four
/// general lines, the non-Fano arrangement and a near-pencil over Q(sqrt(2)).
inline const CatalogueFile& embedded_realizations() {
  static const CatalogueFile file = parse_catalogue(detail::fixtures_text);
  return file;
}

}  // namespace linefree
