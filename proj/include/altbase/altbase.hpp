#pragma once

// Umbrella header for the altbase library: exact arithmetic for alternate
// base numeration systems (greedy expansions, admissibility, periodicity
// classification and certification).

#include "altbase/admissibility.hpp"
#include "altbase/base.hpp"
#include "altbase/certify.hpp"
#include "altbase/config.hpp"
#include "altbase/expansion.hpp"
#include "altbase/interval.hpp"
#include "altbase/numberfield.hpp"
#include "altbase/polynomial.hpp"
#include "altbase/ppfamily.hpp"
#include "altbase/rational.hpp"
#include "altbase/roots.hpp"
#include "altbase/serialize.hpp"
#include "altbase/words.hpp"
