// tests/test-base.cc

// Copyright 2026  The SIK Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sik/base/common.h"
#include "sik/base/config.h"
#include "sik/base/io.h"
#include "sik/base/rng.h"

using namespace sik;

namespace {

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("StrCat stitches mixed types") {
  CHECK(StrCat("a", 1, "b", 2.5) == "a1b2.5");
  CHECK(StrCat() == "");
}

TEST_CASE("SIK_REQUIRE throws sik::Error with the message") {
  CHECK_THROWS_AS(SIK_REQUIRE(false, "boom ", 42), Error);
  try {
    SIK_REQUIRE(1 == 2, "one is not ", 2);
  } catch (const Error &e) {
    const std::string what = e.what();
    CHECK(what.find("one is not 2") != std::string::npos);
  }
  CHECK_NOTHROW(SIK_REQUIRE(true, "never"));
}

TEST_CASE("Rng is deterministic per seed and differs across seeds") {
  Rng a(123), b(123), c(124);
  bool all_equal = true, any_equal_c = false;
  for (int i = 0; i < 100; ++i) {
    const uint64 va = a.NextU64();
    all_equal = all_equal && va == b.NextU64();
    any_equal_c = any_equal_c || va == c.NextU64();
  }
  CHECK(all_equal);
  CHECK_FALSE(any_equal_c);
}

TEST_CASE("Uniform stays in [0,1) with a sane mean") {
  Rng rng(7);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.Uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("UniformInt covers both endpoints uniformly") {
  Rng rng(9);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 50000; ++i) {
    const int64 v = rng.UniformInt(2, 6);
    REQUIRE(v >= 2);
    REQUIRE(v <= 6);
    ++counts[v - 2];
  }
  for (int k = 0; k < 5; ++k)
    CHECK(counts[k] == doctest::Approx(10000).epsilon(0.05));
}

TEST_CASE("Normal matches the first two moments") {
  Rng rng(11);
  double sum = 0, sq = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.Normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.02);
  CHECK(sq / n - mean * mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Shuffle permutes and is seed-deterministic") {
  std::vector<int64> v(50);
  for (int64 i = 0; i < 50; ++i) v[i] = i;
  std::vector<int64> w = v;
  Rng(5).Shuffle(&v);
  Rng(5).Shuffle(&w);
  CHECK(v == w);
  std::vector<int64> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int64 i = 0; i < 50; ++i) CHECK(sorted[i] == i);
  std::vector<int64> u = sorted;
  Rng(6).Shuffle(&u);
  CHECK(u != v);
}

TEST_CASE("Fork and MixSeed derive distinct streams") {
  Rng root(42);
  Rng f1 = root.Fork(1), f2 = root.Fork(2);
  CHECK(f1.NextU64() != f2.NextU64());
  std::set<uint64> seeds;
  for (uint64 i = 0; i < 100; ++i) {
    seeds.insert(MixSeed(42, i));
    seeds.insert(MixSeed(i, 42));  // i == 42 duplicates the first insert
    seeds.insert(MixSeed(42, i, 1));
  }
  CHECK(seeds.size() == 299);
}

TEST_CASE("Binary IO round-trips scalars, arrays and bytes") {
  const std::string path = TempPath("sik_test_base_io.bin");
  {
    BinaryWriter w(path);
    w.Put<uint32>(0xdeadbeef);
    w.Put<int64>(-17);
    w.Put<double>(3.25);
    const double arr[3] = {1.0, -2.0, 0.5};
    w.PutArray(arr, 3);
    w.PutBytes("xyz", 3);
  }
  {
    BinaryReader r(path);
    CHECK(r.Get<uint32>() == 0xdeadbeef);
    CHECK(r.Get<int64>() == -17);
    CHECK(r.Get<double>() == 3.25);
    double arr[3];
    r.GetArray(arr, 3);
    CHECK(arr[1] == -2.0);
    char buf[3];
    r.GetBytes(buf, 3);
    CHECK(std::string(buf, 3) == "xyz");
    CHECK(r.AtEof());
  }
  std::remove(path.c_str());
}

TEST_CASE("Text helpers split and trim") {
  CHECK(SplitLines("a\nb\r\nc\n") == std::vector<std::string>{"a", "b", "c"});
  CHECK(SplitWhitespace("  one\ttwo  three ") ==
        std::vector<std::string>{"one", "two", "three"});
  CHECK(Trim("  x ") == "x");
  CHECK(Trim("\t\r\n") == "");
  const std::string path = TempPath("sik_test_base_text.txt");
  WriteTextFile(path, "hello\nworld\n");
  CHECK(ReadTextFile(path) == "hello\nworld\n");
  std::remove(path.c_str());
}

TEST_CASE("Config parses, defaults and tracks unused keys") {
  Config cfg = Config::FromString(
      "# comment\n"
      "a.x = 3\n"
      "a.y = hello world\n"
      "b.flag = true\n"
      "b.ratio = 0.25\n"
      "b.list = 1, 2,3\n"
      "unused.key = 9\n");
  CHECK(cfg.GetInt("a.x") == 3);
  CHECK(cfg.GetString("a.y") == "hello world");
  CHECK(cfg.GetBool("b.flag"));
  CHECK(cfg.GetDouble("b.ratio") == 0.25);
  CHECK(cfg.GetIntList("b.list", {}) == std::vector<int64>{1, 2, 3});
  CHECK(cfg.GetInt("absent", 5) == 5);
  const std::vector<std::string> unused = cfg.UnusedKeys();
  REQUIRE(unused.size() == 1);
  CHECK(unused[0] == "unused.key");
}

TEST_CASE("Config rejects malformed values and missing keys") {
  Config cfg = Config::FromString("k = notanint\n");
  CHECK_THROWS_AS(cfg.GetInt("k"), Error);
  CHECK_THROWS_AS(cfg.GetInt("missing"), Error);
  CHECK_THROWS_AS(Config::FromString("justakeynovalue\n"), Error);
}

TEST_CASE("Config ToString is sorted and reparseable") {
  Config cfg = Config::FromString("z.b = 2\na.a = 1\n");
  cfg.Set("m.c", "3");
  const std::string text = cfg.ToString();
  CHECK(text.find("a.a") < text.find("m.c"));
  CHECK(text.find("m.c") < text.find("z.b"));
  Config back = Config::FromString(text);
  CHECK(back.GetInt("a.a") == 1);
  CHECK(back.GetInt("m.c") == 3);
  CHECK(back.GetInt("z.b") == 2);
}
