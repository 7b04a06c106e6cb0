#include "jps/jps.h"
