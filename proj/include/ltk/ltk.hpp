#pragma once

#include <ltk/rational.hpp>
#include <ltk/error.hpp>
#include <ltk/linalg.hpp>
#include <ltk/modp.hpp>
#include <ltk/eigen.hpp>
#include <ltk/triple_system.hpp>
#include <ltk/identities.hpp>
#include <ltk/ideals.hpp>
#include <ltk/simple.hpp>
#include <ltk/embedding.hpp>
#include <ltk/catalogue.hpp>
#include <ltk/masa.hpp>
#include <ltk/roots.hpp>
#include <ltk/connect.hpp>
#include <ltk/decompose.hpp>
