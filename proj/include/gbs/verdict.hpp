#pragma once

#include <string>

namespace gbs {

enum class Verdict { yes, no, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

}  // namespace gbs
