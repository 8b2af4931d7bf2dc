#pragma once

#include "ifcrack/error.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/cauchy.hpp"
#include "ifcrack/quadrature.hpp"
#include "ifcrack/dense.hpp"
#include "ifcrack/log_fit.hpp"
#include "ifcrack/poly.hpp"
#include "ifcrack/taylor.hpp"
#include "ifcrack/spline.hpp"
#include "ifcrack/post.hpp"
