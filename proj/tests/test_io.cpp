#include <gtest/gtest.h>

#include <sstream>

#include "schwinger/io.hpp"
#include "schwinger/presets.hpp"

using namespace schwinger;

namespace {

std::string emit(const SweepSpec& s) {
  std::ostringstream os;
  write_csv(os, {sweep_metadata(s), run_sweep(s)});
  return os.str();
}

}  // namespace

TEST(Csv, RoundTripIsByteIdentical) {
  for (auto name : {"fig1", "fig6", "fig10"}) {
    const auto text = emit(figure_preset(name).front());
    std::istringstream is(text);
    std::ostringstream again;
    write_csv(again, read_csv(is));
    EXPECT_EQ(text, again.str()) << name;
  }
}

TEST(Csv, RoundTripKeepsErrorRows) {
  SweepSpec s;
  s.axis = SweepAxis::E0;
  s.start = 0.0;
  s.stop = 1.0;
  s.steps = 3;
  const auto text = emit(s);
  EXPECT_NE(text.find("nan,nan,nan,nan,nan,zero_field"), std::string::npos);
  std::istringstream is(text);
  const auto doc = read_csv(is);
  EXPECT_EQ(doc.rows[0].error, "zero_field");
  std::ostringstream again;
  write_csv(again, doc);
  EXPECT_EQ(text, again.str());
}

TEST(Csv, MetadataDescribesSweep) {
  const auto s = figure_preset("fig5").front();
  const auto md = sweep_metadata(s);
  auto has = [&](const std::string& k, const std::string& v) {
    for (const auto& [a, b] : md)
      if (a == k) return b == v;
    return false;
  };
  EXPECT_TRUE(has("stat", "boson"));
  EXPECT_TRUE(has("field", "sauter"));
  EXPECT_TRUE(has("axis", "E0"));
  EXPECT_TRUE(has("scale", "log"));
  EXPECT_TRUE(has("tau", "0.29999999999999999"));
  EXPECT_TRUE(has("steps", "400"));
}

TEST(Csv, Deterministic) {
  const auto s = figure_preset("fig8").front();
  EXPECT_EQ(emit(s), emit(s));
}

TEST(Csv, RejectsMalformedInput) {
  std::istringstream bad_header("# a=b\nfoo,bar\n");
  EXPECT_THROW(read_csv(bad_header), Error);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  EXPECT_THROW(read_csv(short_row), Error);
  std::istringstream bad_number(std::string(kCsvHeader) + "\n1,x,3,4,5,6,\n");
  EXPECT_THROW(read_csv(bad_number), Error);
  EXPECT_THROW(parse_double("1.5e"), Error);
}

TEST(Json, RowsAndNulls) {
  SweepSpec s;
  s.axis = SweepAxis::E0;
  s.start = 0.0;
  s.stop = 1.0;
  s.steps = 3;
  const auto j = rows_to_json(run_sweep(s));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_TRUE(j[0]["beta2"].is_null());
  EXPECT_EQ(j[0]["error"], "zero_field");
  EXPECT_TRUE(j[1]["error"].is_null());
  EXPECT_DOUBLE_EQ(j[2]["beta2"].get<double>(), std::exp(-2.0 * kPi));
}
