#pragma once

namespace edrb {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace edrb
