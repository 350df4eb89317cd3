#include "wbr/verify.hpp"
