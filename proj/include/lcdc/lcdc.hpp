#pragma once

#include "lcdc/code.hpp"
#include "lcdc/codefile.hpp"
#include "lcdc/construct.hpp"
#include "lcdc/error.hpp"
#include "lcdc/field.hpp"
#include "lcdc/lcd.hpp"
#include "lcdc/matrix.hpp"
#include "lcdc/report.hpp"
