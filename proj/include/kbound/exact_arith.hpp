#pragma once

#include "kbound/errors.hpp"
#include "kbound/euclid.hpp"
#include "kbound/polynomial.hpp"
#include "kbound/rational.hpp"
#include "kbound/sign_certificate.hpp"
