#pragma once

#include "lexdepth/arith.hpp"
#include "lexdepth/depthset.hpp"
#include "lexdepth/errors.hpp"
#include "lexdepth/hilbert.hpp"
#include "lexdepth/io.hpp"
#include "lexdepth/lex.hpp"
#include "lexdepth/monomial.hpp"
#include "lexdepth/oseq.hpp"
#include "lexdepth/resolution.hpp"
#include "lexdepth/sparse_rank.hpp"
