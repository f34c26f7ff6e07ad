#ifndef CHARSTACK_ORACLE_HPP
#define CHARSTACK_ORACLE_HPP

#include "charstack/oracle/classes.hpp"
#include "charstack/oracle/field.hpp"
#include "charstack/oracle/group.hpp"

#endif
