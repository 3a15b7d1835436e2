#pragma once

#include "revpeg/census.hpp"
#include "revpeg/certificates.hpp"
#include "revpeg/configuration.hpp"
#include "revpeg/constructive.hpp"
#include "revpeg/error.hpp"
#include "revpeg/graph.hpp"
#include "revpeg/json_io.hpp"
#include "revpeg/oracle.hpp"
#include "revpeg/quaternion.hpp"
