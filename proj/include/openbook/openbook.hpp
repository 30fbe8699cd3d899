#pragma once

#include "openbook/abelian.hpp"
#include "openbook/brieskorn.hpp"
#include "openbook/dim3.hpp"
#include "openbook/errors.hpp"
#include "openbook/groups.hpp"
#include "openbook/matrix.hpp"
#include "openbook/periodicity.hpp"
#include "openbook/poly.hpp"
#include "openbook/report.hpp"
#include "openbook/seifert.hpp"
#include "openbook/seifert_io.hpp"
#include "openbook/signature.hpp"
#include "openbook/smith.hpp"
