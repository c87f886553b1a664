#include "grhopf/field.hpp"
