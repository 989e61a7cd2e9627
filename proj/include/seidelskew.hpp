#pragma once

/// Umbrella header: the whole library in one include.
///
/// Layering (each header also stands alone):
///   errors, bigint, matrix, prng, parallel     - infrastructure
///   tournament, hadamard, io, codes            - combinatorial core
///   int_poly, char_poly, certificates          - exact spectra
///   jacobi, spectra                            - floating-point spectra
///   search                                      - enumeration harness
///   json_reports                                - report serialization

#include "seidelskew/bigint.hpp"
#include "seidelskew/certificates.hpp"
#include "seidelskew/char_poly.hpp"
#include "seidelskew/codes.hpp"
#include "seidelskew/errors.hpp"
#include "seidelskew/hadamard.hpp"
#include "seidelskew/int_poly.hpp"
#include "seidelskew/io.hpp"
#include "seidelskew/jacobi.hpp"
#include "seidelskew/json_reports.hpp"
#include "seidelskew/matrix.hpp"
#include "seidelskew/parallel.hpp"
#include "seidelskew/prng.hpp"
#include "seidelskew/search.hpp"
#include "seidelskew/spectra.hpp"
#include "seidelskew/tournament.hpp"
