#pragma once

#include "segment.hpp"
#include "multisegment.hpp"
#include "text.hpp"
#include "zelevinsky.hpp"
#include "removal.hpp"
#include "invariants.hpp"
#include "minimality.hpp"
#include "bruhat.hpp"
#include "universe.hpp"
#include "campaign.hpp"
