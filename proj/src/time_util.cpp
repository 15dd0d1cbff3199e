#include "mentionnet/time_util.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace mentionnet {
namespace {

using namespace std::chrono;

bool read_uint(std::string_view text, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto res = std::from_chars(text.data() + pos, text.data() + pos + width, out);
  return res.ec == std::errc{};
}

std::optional<Timestamp> assemble(int y, int mo, int d, int h, int mi, int s, int offset_minutes) {
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  auto ts = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
  return ts - minutes{offset_minutes};
}

// 2016-04-28T02:45:40Z
std::optional<Timestamp> parse_iso(std::string_view t) {
  if (t.size() != 20 || t[4] != '-' || t[7] != '-' || t[10] != 'T' || t[13] != ':' ||
      t[16] != ':' || t[19] != 'Z') {
    return std::nullopt;
  }
  int y, mo, d, h, mi, s;
  if (!read_uint(t, 0, 4, y) || !read_uint(t, 5, 2, mo) || !read_uint(t, 8, 2, d) ||
      !read_uint(t, 11, 2, h) || !read_uint(t, 14, 2, mi) || !read_uint(t, 17, 2, s)) {
    return std::nullopt;
  }
  return assemble(y, mo, d, h, mi, s, 0);
}

constexpr std::array<std::string_view, 7> kWeekdays{"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
constexpr std::array<std::string_view, 12> kMonths{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

// Sat Apr 16 02:45:40 +0000 2016
std::optional<Timestamp> parse_classic(std::string_view t) {
  if (t.size() != 30 || t[3] != ' ' || t[7] != ' ' || t[10] != ' ' || t[13] != ':' ||
      t[16] != ':' || t[19] != ' ' || t[25] != ' ') {
    return std::nullopt;
  }
  bool weekday_ok = false;
  for (auto w : kWeekdays) weekday_ok = weekday_ok || t.substr(0, 3) == w;
  if (!weekday_ok) return std::nullopt;
  int mo = 0;
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (t.substr(4, 3) == kMonths[i]) mo = static_cast<int>(i) + 1;
  }
  if (mo == 0) return std::nullopt;
  int d, h, mi, s, oh, om, y;
  if (!read_uint(t, 8, 2, d) || !read_uint(t, 11, 2, h) || !read_uint(t, 14, 2, mi) ||
      !read_uint(t, 17, 2, s) || !read_uint(t, 21, 2, oh) || !read_uint(t, 23, 2, om) ||
      !read_uint(t, 26, 4, y)) {
    return std::nullopt;
  }
  if (t[20] != '+' && t[20] != '-') return std::nullopt;
  if (om > 59) return std::nullopt;
  int offset = (oh * 60 + om) * (t[20] == '-' ? -1 : 1);
  return assemble(y, mo, d, h, mi, s, offset);
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  if (auto iso = parse_iso(text)) return iso;
  return parse_classic(text);
}

std::string format_timestamp(Timestamp ts) {
  auto day_part = floor<days>(ts);
  year_month_day ymd{day_part};
  hh_mm_ss hms{ts - day_part};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string format_day(Day d) {
  year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::optional<Day> parse_day(std::string_view t) {
  if (t.size() != 10 || t[4] != '-' || t[7] != '-') return std::nullopt;
  int y, mo, d;
  if (!read_uint(t, 0, 4, y) || !read_uint(t, 5, 2, mo) || !read_uint(t, 8, 2, d)) {
    return std::nullopt;
  }
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

}  // namespace mentionnet
