#pragma once

#include "fuzzy/algebra.hpp"
#include "fuzzy/bam.hpp"
#include "fuzzy/cetd.hpp"
#include "fuzzy/fam.hpp"
#include "fuzzy/fcm.hpp"
#include "fuzzy/fre.hpp"
#include "fuzzy/frm.hpp"
#include "fuzzy/matrix.hpp"
#include "fuzzy/relations.hpp"
