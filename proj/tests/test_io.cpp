#include <doctest.h>

#include "qent/io.hpp"

using namespace qent;

namespace {

OutputRecord sample_record() {
  OutputRecord rec;
  rec.command = "transition";
  rec.config = {{"d", "2"},       {"m", "2"},       {"n", "3..10"},
                {"samples", "10000"}, {"seed", "42"}, {"workers", "4"},
                {"keep", "first_m"}};
  rec.columns = {"N", "p_ppt", "ci_low", "ci_high", "samples"};
  rec.rows = {{"3", "0.0001", "0", "0.00056", "10000"},
              {"4", fmt_double(0.1234567890123456789), "0.1", "0.2", "10000"}};
  return rec;
}

}  // namespace

TEST_CASE("doubles format to the shortest round-trip representation") {
  CHECK(fmt_double(0.5) == "0.5");
  CHECK(fmt_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(fmt_double(2.0 / 3.0) == "0.6666666666666666");
  for (double x : {1e-300, 123456.789, 0.1, 3.0, 1.2424533248940002}) {
    double back = 0.0;
    std::sscanf(fmt_double(x).c_str(), "%lf", &back);
    CHECK(back == x);
  }
}

TEST_CASE("CSV round-trips the resolved config and payload") {
  const OutputRecord rec = sample_record();
  const std::string text = render_csv(rec);
  const OutputRecord back = parse_csv(text);
  CHECK(back == rec);
  CHECK(render_csv(back) == text);
}

TEST_CASE("JSON round-trips the resolved config and payload") {
  const OutputRecord rec = sample_record();
  const std::string text = render_json(rec);
  const OutputRecord back = parse_json(text);
  CHECK(back == rec);
  CHECK(render_json(back) == text);
}

TEST_CASE("CSV echo lines carry schema version and command first") {
  const std::string text = render_csv(sample_record());
  CHECK(text.rfind("# schema_version=1\n# command=transition\n", 0) == 0);
}
