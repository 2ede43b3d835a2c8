#ifndef S1S_S1S_HPP
#define S1S_S1S_HPP

#include "s1s/borel/classify.hpp"
#include "s1s/cantor/construction.hpp"
#include "s1s/cantor/kernel.hpp"
#include "s1s/cantor/syntax.hpp"
#include "s1s/mso/compile.hpp"
#include "s1s/mso/model_check.hpp"
#include "s1s/mso/parser.hpp"
#include "s1s/mso/templates.hpp"
#include "s1s/omega/complement.hpp"
#include "s1s/omega/hoa.hpp"

#endif
