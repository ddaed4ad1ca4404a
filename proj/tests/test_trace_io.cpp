#include <cstring>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "mmo/error.hpp"
#include "mmo/trace_io.hpp"

namespace mmo {
namespace {

bool bits_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void expect_bit_identical(const Trace& a, const Trace& b) {
  EXPECT_EQ(a.config.dim, b.config.dim);
  EXPECT_TRUE(bits_equal(a.config.grad_bound, b.config.grad_bound));
  EXPECT_EQ(a.config.horizon, b.config.horizon);
  EXPECT_EQ(a.config.seed, b.config.seed);
  EXPECT_EQ(a.strategy_tag, b.strategy_tag);
  EXPECT_EQ(a.adversary_tag, b.adversary_tag);
  ASSERT_EQ(a.rounds.size(), b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    const auto& x = a.rounds[i];
    const auto& y = b.rounds[i];
    ASSERT_EQ(x.t, y.t);
    for (std::size_t k = 0; k < x.w.dim(); ++k) {
      ASSERT_TRUE(bits_equal(x.w[k], y.w[k]));
      ASSERT_TRUE(bits_equal(x.g[k], y.g[k]));
      ASSERT_TRUE(bits_equal(x.theta[k], y.theta[k]));
    }
    ASSERT_TRUE(bits_equal(x.loss, y.loss));
    ASSERT_EQ(x.eps.has_value(), y.eps.has_value());
    if (x.eps) ASSERT_TRUE(bits_equal(*x.eps, *y.eps));
  }
}

Trace sample_trace(bool with_horizon) {
  GameConfig c;
  c.dim = 3;
  c.grad_bound = 0.7;
  c.seed = 0xfeedfacecafebeefULL;
  if (with_horizon) {
    c.horizon = 64;
    return run_game(NormalKnownTParams{0.3, 2.0, 0.7, 64}, {AdversaryKind::gaussian_random, 0.7}, c, 64);
  }
  return run_game(OgdParams{0.013, 0.7, std::nullopt}, {AdversaryKind::orthogonal_minimax, 0.7}, c, 64);
}

TEST(TraceJson, RoundTripIsBitExact) {
  for (bool horizon : {false, true}) {
    const Trace trace = sample_trace(horizon);
    std::stringstream buf;
    write_trace_json(trace, buf);
    expect_bit_identical(read_trace_json(buf), trace);
  }
}

TEST(TraceJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "mmo_trace_roundtrip.json";
  const Trace trace = sample_trace(true);
  save_trace(trace, path.string(), true);
  expect_bit_identical(load_trace_json(path.string()), trace);
  std::filesystem::remove(path);
  EXPECT_THROW(load_trace_json(path.string()), InvalidArgument);
}

TEST(TraceJson, MalformedInput) {
  std::stringstream bad("{\"config\": {}}");
  EXPECT_THROW(read_trace_json(bad), InvalidArgument);
  std::stringstream junk("not json");
  EXPECT_THROW(read_trace_json(junk), InvalidArgument);
}

TEST(TraceCsv, HeaderAndRows) {
  const Trace trace = sample_trace(false);
  std::stringstream buf;
  write_trace_csv(trace, buf);
  std::string line;
  std::getline(buf, line);
  EXPECT_EQ(line, "t,loss,reward_cum,theta_norm,eps_t,w_0,w_1,w_2,g_0,g_1,g_2");
  int rows = 0;
  double reward_cum = 0.0;
  while (std::getline(buf, line)) {
    ++rows;
    std::stringstream fields(line);
    std::string t, loss, cum, theta, eps;
    std::getline(fields, t, ',');
    std::getline(fields, loss, ',');
    std::getline(fields, cum, ',');
    std::getline(fields, theta, ',');
    std::getline(fields, eps, ',');
    EXPECT_EQ(std::stoi(t), rows);
    EXPECT_TRUE(eps.empty());
    reward_cum -= trace.rounds[rows - 1].loss;
    EXPECT_EQ(std::stod(cum), reward_cum);
    EXPECT_EQ(std::stod(loss), trace.rounds[rows - 1].loss);
  }
  EXPECT_EQ(rows, 64);
}

TEST(TraceCsv, WideGamesOmitCoordinates) {
  GameConfig c;
  c.dim = 9;
  const Trace trace = run_game(AdaptiveNormalParams{}, {AdversaryKind::gaussian_random, 1.0}, c, 3);
  std::stringstream buf;
  write_trace_csv(trace, buf);
  std::string header;
  std::getline(buf, header);
  EXPECT_EQ(header, "t,loss,reward_cum,theta_norm,eps_t");
}

}  // namespace
}  // namespace mmo
