// Copyright 2026 The Crosscheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "crosscheck/base/random.h"
#include "crosscheck/base/utf8.h"
#include "crosscheck/corpus/collect.h"
#include "crosscheck/corpus/html_extract.h"
#include "crosscheck/corpus/segmenter.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "httplib.h"

namespace crosscheck::corpus {
namespace {

using ::testing::HasSubstr;
using ::testing::Not;

// ---------------------------------------------------------------------------
// Sentence segmentation

TEST(SegmentSentences, TwoSentencesWithHandCountedSpans) {
  const std::string body = "It rained. We stayed home.";
  const auto s = SegmentSentences(body);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "It rained.");
  EXPECT_EQ(s[0].span_start, 0u);
  EXPECT_EQ(s[0].span_end, 10u);
  EXPECT_EQ(s[1].text, "We stayed home.");
  EXPECT_EQ(s[1].span_start, 11u);
  EXPECT_EQ(s[1].span_end, 26u);
  EXPECT_EQ(s[1].span_end, body.size());
}

TEST(SegmentSentences, NoBoundaryGivesOneFullSpan) {
  const auto s = SegmentSentences("Hello world");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].text, "Hello world");
  EXPECT_EQ(s[0].span_start, 0u);
  EXPECT_EQ(s[0].span_end, 11u);
}

TEST(SegmentSentences, ProtectsKnownAbbreviations) {
  const auto s = SegmentSentences("Mr. Smith arrived. He spoke.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Mr. Smith arrived.");
  EXPECT_EQ(s[1].text, "He spoke.");
  EXPECT_TRUE(IsKnownAbbreviation("Mr."));
  EXPECT_FALSE(IsKnownAbbreviation("rained."));
}

TEST(SegmentSentences, EmptyAndWhitespaceBodies) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences(" \n\n ").empty());
}

TEST(SegmentSentences, ParagraphBreakEndsSentence) {
  const auto s = SegmentSentences("First line without stop\n\nSecond one.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "First line without stop");
  EXPECT_EQ(s[1].text, "Second one.");
}

TEST(SegmentSentences, SpansCountCodePoints) {
  const std::string body = "Café opened. Naïve plan failed.";
  const auto s = SegmentSentences(body);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].span_end, 12u);
  EXPECT_EQ(s[1].span_start, 13u);
  EXPECT_EQ(s[1].span_end, CodepointLength(body));
}

std::string RandomBody(SeededRng& rng) {
  static const std::vector<std::string> words = {
      "rail",  "Mr.",  "station", "said", "U.S.", "café",  "trains",
      "the",   "\"ok", "St.",     "no",   "3.5",  "e.g.",  "Dr.",
      "fire",  "it's", "(see",    "all)", "naïve", "é"};
  static const std::vector<std::string> ends = {".", "!", "?", ".\"", "...",
                                                ""};
  std::string body;
  const size_t sentences = 1 + rng.UniformIndex(6);
  for (size_t i = 0; i < sentences; ++i) {
    const size_t n = 1 + rng.UniformIndex(8);
    for (size_t w = 0; w < n; ++w) {
      if (w > 0) body += rng.UniformIndex(10) == 0 ? "  " : " ";
      body += words[rng.UniformIndex(words.size())];
    }
    body += ends[rng.UniformIndex(ends.size())];
    if (i + 1 < sentences) body += rng.UniformIndex(4) == 0 ? "\n\n" : " ";
  }
  return body;
}

TEST(SegmentSentences, PropertySpansRoundTripToText) {
  SeededRng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string body = RandomBody(rng);
    const auto sentences = SegmentSentences(body);
    ASSERT_FALSE(sentences.empty()) << body;
    size_t prev_end = 0;
    for (size_t i = 0; i < sentences.size(); ++i) {
      const Sentence& s = sentences[i];
      EXPECT_EQ(s.sentence_index, static_cast<int>(i));
      EXPECT_LT(s.span_start, s.span_end);
      EXPECT_GE(s.span_start, prev_end);
      EXPECT_LE(s.span_end, CodepointLength(body));
      EXPECT_EQ(CodepointSubstr(body, s.span_start, s.span_end), s.text)
          << "body: " << body;
      EXPECT_EQ(TrimWhitespace(s.text), s.text);
      prev_end = s.span_end;
    }
  }
}

// ---------------------------------------------------------------------------
// Body extraction

TEST(ExtractBody, SingleParagraph) {
  const std::string para =
      "The bridge closed. Traffic was diverted. Repairs begin Monday.";
  auto doc = ExtractBody("<html><body><p>" + para + "</p></body></html>");
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(doc->body, para);
}

TEST(ExtractBody, NavBarAndFiveParagraphs) {
  const std::string html = R"(<!doctype html>
<html><head><title>Flood update | Daily Sun</title>
<script>var tracking = "Para zero";</script></head>
<body>
<nav><a href="/">Home</a> <a href="/world">World news menu</a></nav>
<article>
  <p>Para one text.</p>
  <p>Para   two
     text.</p>
  <p>Para three &amp; more.</p>
  <p>Para four text.</p>
  <p>Para five text.</p>
</article>
<footer>Copyright notice</footer>
</body></html>)";
  auto doc = ExtractBody(html);
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(doc->body,
            "Para one text.\n\nPara two text.\n\nPara three & more.\n\n"
            "Para four text.\n\nPara five text.");
  EXPECT_THAT(doc->body, Not(HasSubstr("menu")));
  EXPECT_THAT(doc->body, Not(HasSubstr("Copyright")));
  EXPECT_THAT(doc->body, Not(HasSubstr("zero")));
  EXPECT_EQ(doc->title, "Flood update | Daily Sun");
}

TEST(ExtractBody, PlainTextPassesThrough) {
  const std::string text = "Just words. Nothing marked up.";
  auto doc = ExtractBody(text);
  ASSERT_TRUE(doc.ok());
  EXPECT_EQ(doc->body, text);
  EXPECT_EQ(doc->title, "");
}

TEST(ExtractBody, EmptyDocumentIsAnError) {
  EXPECT_EQ(ExtractBody("").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ExtractBody("<html><body><nav>x</nav></body></html>")
                .status()
                .code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(ExtractBody, TitlePrefersOpenGraphThenHeadingAndStripsVenue) {
  auto og = ExtractBody(
      R"(<html><head><title>T | Site</title>
<meta property="og:title" content="Open Graph Title">
<meta property="og:site_name" content="Site"></head>
<body><h1>Heading</h1><p>Body text.</p></body></html>)");
  ASSERT_TRUE(og.ok());
  EXPECT_EQ(og->title, "Open Graph Title");
  EXPECT_EQ(og->venue, "Site");

  auto h1 = ExtractBody(
      "<html><head><title>T | Site</title></head>"
      "<body><h1>Heading</h1><p>Body text.</p></body></html>");
  ASSERT_TRUE(h1.ok());
  EXPECT_EQ(h1->title, "Heading");

  auto suffix = ExtractBody(
      R"(<html><head><title>Story - Site</title>
<meta property="og:site_name" content="Site"></head>
<body><p>Body text.</p></body></html>)");
  ASSERT_TRUE(suffix.ok());
  EXPECT_EQ(suffix->title, "Story");
}

TEST(DecodeHtmlEntities, NamedAndNumeric) {
  EXPECT_EQ(DecodeHtmlEntities("a &amp; b &lt;c&gt; &#233; &#xE9; &quot;"),
            "a & b <c> é é \"");
  EXPECT_EQ(DecodeHtmlEntities("&bogus; &#xZZ;"), "&bogus; &#xZZ;");
}

// ---------------------------------------------------------------------------
// Manifests and collection

TEST(ParseManifest, AcceptsUrlsAndFiles) {
  auto m = ParseManifest(
      R"({"story_title": "Derailment", "urls": ["http://x/1"],
          "html_files": ["a.html"], "cluster_id": "c1",
          "created_at": "2026-01-15T12:00:00Z"})",
      "/base");
  ASSERT_TRUE(m.ok()) << m.status();
  EXPECT_EQ(m->story_title, "Derailment");
  EXPECT_EQ(m->urls, std::vector<std::string>{"http://x/1"});
  EXPECT_EQ(m->html_files, std::vector<std::string>{"a.html"});
  EXPECT_EQ(m->cluster_id, "c1");
  EXPECT_EQ(m->base_dir, std::filesystem::path("/base"));
}

TEST(ParseManifest, RejectsMalformedInput) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"urls": ["http://x"]})",
           R"({"story_title": "t"})",
           R"({"story_title": "t", "urls": "http://x"})",
           R"({"story_title": "t", "urls": [""]})",
           R"({"story_title": "t", "urls": ["http://x"], "extra": 1})",
           R"({"story_title": "t", "urls": ["http://x"],
               "created_at": "yesterday"})",
       }) {
    EXPECT_EQ(ParseManifest(bad, ".").status().code(),
              absl::StatusCode::kInvalidArgument)
        << bad;
  }
}

TEST(DeriveClusterId, StableAndSlugged) {
  Manifest m;
  m.story_title = "Ohio Train Derailment!";
  m.urls = {"http://a", "http://b"};
  const std::string id = DeriveClusterId(m);
  EXPECT_EQ(id, DeriveClusterId(m));
  EXPECT_TRUE(id.starts_with("ohio-train-derailment-")) << id;
  m.urls.push_back("http://c");
  EXPECT_NE(id, DeriveClusterId(m));
}

TEST(ResolveCreatedAt, ManifestValueWins) {
  Manifest m;
  m.created_at = "2026-01-15T12:00:00Z";
  EXPECT_EQ(*ResolveCreatedAt(m), "2026-01-15T12:00:00Z");
}

class FixtureServer {
 public:
  FixtureServer() {
    for (int i = 1; i <= 3; ++i) {
      const std::string path = "/story/" + std::to_string(i);
      server_.Get(path, [i](const httplib::Request&, httplib::Response& res) {
        if (i == 2) {
          res.status = 404;
          res.set_content("gone", "text/plain");
          return;
        }
        res.set_content(
            "<html><head><meta property=\"og:site_name\" content=\"Venue " +
                std::to_string(i) + "\"><title>Story " + std::to_string(i) +
                "</title></head><body><nav>menu</nav><p>Article " +
                std::to_string(i) +
                " reports the fire. Crews responded quickly.</p></body></html>",
            "text/html");
      });
    }
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FixtureServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url(int i) const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/story/" +
           std::to_string(i);
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST(CollectCluster, ThreeUrlsOneMissing) {
  FixtureServer server;
  Manifest m;
  m.story_title = "Fire";
  m.urls = {server.Url(1), server.Url(2), server.Url(3)};
  m.created_at = "2026-01-01T00:00:00Z";
  HttpPageFetcher fetcher(std::chrono::seconds(5));
  auto got = CollectCluster(m, fetcher, {.parallelism = 3});
  ASSERT_TRUE(got.ok()) << got.status();
  ASSERT_EQ(got->cluster.articles.size(), 2u);
  ASSERT_EQ(got->failures.size(), 1u);
  EXPECT_EQ(got->failures[0].source, server.Url(2));
  EXPECT_THAT(got->failures[0].reason, HasSubstr("404"));
  EXPECT_EQ(got->cluster.articles[0].url, server.Url(1));
  EXPECT_EQ(got->cluster.articles[0].venue, "Venue 1");
  EXPECT_EQ(got->cluster.articles[1].url, server.Url(3));
  EXPECT_EQ(got->cluster.articles[1].sentences.size(), 2u);
  EXPECT_NE(got->cluster.articles[0].article_id,
            got->cluster.articles[1].article_id);
}

TEST(CollectCluster, SingleLocalFile) {
  const auto dir = std::filesystem::temp_directory_path() / "cc_collect_one";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "only.html")
      << "<html><body><p>One article. Two sentences.</p></body></html>";
  Manifest m;
  m.story_title = "Solo";
  m.html_files = {"only.html"};
  m.base_dir = dir;
  m.created_at = "2026-01-01T00:00:00Z";
  HttpPageFetcher fetcher;
  auto got = CollectCluster(m, fetcher, {});
  ASSERT_TRUE(got.ok()) << got.status();
  ASSERT_EQ(got->cluster.articles.size(), 1u);
  EXPECT_TRUE(got->failures.empty());
  EXPECT_EQ(got->cluster.articles[0].venue, "only");
  EXPECT_EQ(got->cluster.articles[0].sentences.size(), 2u);
  std::filesystem::remove_all(dir);
}

class FailingFetcher : public PageFetcher {
 public:
  absl::StatusOr<std::string> Fetch(const std::string&) override {
    return absl::UnavailableError("connection refused");
  }
};

TEST(CollectCluster, AllConnectionFailuresReportNetwork) {
  Manifest m;
  m.story_title = "Offline";
  m.urls = {"http://a", "http://b"};
  m.created_at = "2026-01-01T00:00:00Z";
  FailingFetcher fetcher;
  auto got = CollectCluster(m, fetcher, {});
  EXPECT_EQ(got.status().code(), absl::StatusCode::kUnavailable);
  EXPECT_THAT(std::string(got.status().message()), HasSubstr("network"));
}

class MapFetcher : public PageFetcher {
 public:
  absl::StatusOr<std::string> Fetch(const std::string& url) override {
    return "<p>Page " + url + " body. More text here.</p>";
  }
};

TEST(CollectCluster, FiftyUrlsGiveFiftyArticles) {
  Manifest m;
  m.story_title = "Big story";
  for (int i = 0; i < 50; ++i) m.urls.push_back("http://n/" + std::to_string(i));
  m.created_at = "2026-01-01T00:00:00Z";
  MapFetcher fetcher;
  auto got = CollectCluster(m, fetcher, {.parallelism = 8});
  ASSERT_TRUE(got.ok());
  EXPECT_EQ(got->cluster.articles.size(), 50u);
  for (size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(got->cluster.articles[i].url, m.urls[i]);
  }
}

}  // namespace
}  // namespace crosscheck::corpus
