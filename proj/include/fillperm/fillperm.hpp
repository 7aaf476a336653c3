#pragma once

#include "fillperm/errors.hpp"
#include "fillperm/permutation.hpp"
#include "fillperm/filling.hpp"
#include "fillperm/twist.hpp"
#include "fillperm/surgery.hpp"
#include "fillperm/census.hpp"
#include "fillperm/io.hpp"
