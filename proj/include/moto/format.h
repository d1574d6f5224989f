#ifndef MOTO_FORMAT_H_
#define MOTO_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

namespace moto {

// Shortest decimal string that parses back to exactly `value`.
std::string FormatRoundTrip(double value);
// Fixed notation with `decimals` digits after the point.
std::string FormatFixed(double value, int decimals);

// Exact inverse of FormatRoundTrip; throws std::invalid_argument on trailing
// garbage or empty input.
double ParseDouble(std::string_view text);
long long ParseInt(std::string_view text);

std::vector<std::string> Split(std::string_view text, char sep);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace moto

#endif  // MOTO_FORMAT_H_
