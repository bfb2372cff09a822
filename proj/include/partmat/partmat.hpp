#pragma once

#include "partmat/bigint.hpp"
#include "partmat/cdk.hpp"
#include "partmat/enumerate.hpp"
#include "partmat/errors.hpp"
#include "partmat/fishburn_matrix.hpp"
#include "partmat/golden.hpp"
#include "partmat/identities.hpp"
#include "partmat/induced_path.hpp"
#include "partmat/inversion_sequence.hpp"
#include "partmat/io.hpp"
#include "partmat/maps.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"
#include "partmat/phi.hpp"
#include "partmat/polynomial.hpp"
#include "partmat/series.hpp"
#include "partmat/stream.hpp"
#include "partmat/verify.hpp"
