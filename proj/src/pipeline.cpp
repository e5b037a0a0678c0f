#include "onesys/errors.hpp"
