#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xop::cli {

/// Streaming JSON writer with two-space indentation. Numbers are printed with
/// 17 significant digits; NaN and infinities become null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();
  JsonWriter& array(std::span<const double> values);

  /// Terminates the document with a newline.
  void finish();

 private:
  void before_value();
  void newline();

  struct Level {
    bool is_array;
    bool empty;
  };
  std::ostream& out_;
  std::vector<Level> stack_;
  bool after_key_ = false;
};

std::string format_number(double v);
std::string escape(std::string_view s);

}  // namespace xop::cli
