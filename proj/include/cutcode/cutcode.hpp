#pragma once

#include "cutcode/gf.hpp"
#include "cutcode/linalg.hpp"
#include "cutcode/pg.hpp"
#include "cutcode/code.hpp"
#include "cutcode/correspond.hpp"
#include "cutcode/minimal.hpp"
#include "cutcode/construct.hpp"
#include "cutcode/bounds.hpp"
#include "cutcode/search.hpp"
#include "cutcode/io.hpp"
