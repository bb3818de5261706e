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

#include "crosscheck/corpus/html_extract.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/utf8.h"

namespace crosscheck::corpus {
namespace {

struct Tag {
  std::string name;  // lowercase
  bool closing = false;
  bool self_closing = false;
  std::vector<std::pair<std::string, std::string>> attributes;

  std::string_view Attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return v;
    }
    return {};
  }
};

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':' ||
         c == '_';
}

// Parses a tag starting at html[pos] == '<'. On success advances pos past
// the closing '>'.
std::optional<Tag> ParseTag(std::string_view html, size_t* pos) {
  size_t i = *pos + 1;
  Tag tag;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  if (i >= html.size() || !std::isalpha(static_cast<unsigned char>(html[i]))) {
    return std::nullopt;
  }
  const size_t name_start = i;
  while (i < html.size() && IsNameChar(html[i])) ++i;
  tag.name = absl::AsciiStrToLower(AbslView(html.substr(name_start, i - name_start)));

  while (i < html.size()) {
    while (i < html.size() && std::isspace(static_cast<unsigned char>(html[i])))
      ++i;
    if (i >= html.size()) break;
    if (html[i] == '>') {
      *pos = i + 1;
      return tag;
    }
    if (html[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    const size_t key_start = i;
    while (i < html.size() && html[i] != '=' && html[i] != '>' &&
           html[i] != '/' && !std::isspace(static_cast<unsigned char>(html[i])))
      ++i;
    std::string key =
        absl::AsciiStrToLower(AbslView(html.substr(key_start, i - key_start)));
    std::string value;
    while (i < html.size() && std::isspace(static_cast<unsigned char>(html[i])))
      ++i;
    if (i < html.size() && html[i] == '=') {
      ++i;
      while (i < html.size() &&
             std::isspace(static_cast<unsigned char>(html[i])))
        ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char quote = html[i++];
        const size_t end = html.find(quote, i);
        const size_t stop = end == std::string_view::npos ? html.size() : end;
        value = std::string(html.substr(i, stop - i));
        i = stop == html.size() ? stop : stop + 1;
      } else {
        const size_t value_start = i;
        while (i < html.size() && html[i] != '>' &&
               !std::isspace(static_cast<unsigned char>(html[i])))
          ++i;
        value = std::string(html.substr(value_start, i - value_start));
      }
    }
    if (!key.empty()) tag.attributes.emplace_back(std::move(key), DecodeHtmlEntities(value));
  }
  return std::nullopt;
}

const absl::flat_hash_set<std::string_view>& VoidElements() {
  static const auto* set = new absl::flat_hash_set<std::string_view>{
      "area", "base", "br", "col", "embed", "hr", "img", "input", "link",
      "meta", "param", "source", "track", "wbr"};
  return *set;
}

// Elements whose content is never article text.
const absl::flat_hash_set<std::string_view>& SkippedElements() {
  static const auto* set = new absl::flat_hash_set<std::string_view>{
      "nav",    "header", "footer",   "aside",  "menu",   "form",
      "button", "select", "figure",   "iframe", "svg",    "canvas",
      "object", "video",  "audio",    "dialog", "noscript"};
  return *set;
}

// Content of these is raw text up to the matching close tag.
const absl::flat_hash_set<std::string_view>& RawTextElements() {
  static const auto* set = new absl::flat_hash_set<std::string_view>{
      "script", "style", "textarea", "title", "template", "noscript"};
  return *set;
}

const absl::flat_hash_set<std::string_view>& BlockElements() {
  static const auto* set = new absl::flat_hash_set<std::string_view>{
      "p",       "div",    "section", "article",    "main",  "body",
      "h1",      "h2",     "h3",      "h4",         "h5",    "h6",
      "li",      "ul",     "ol",      "blockquote", "pre",   "td",
      "th",      "tr",     "table",   "dd",         "dt",    "dl",
      "address", "figcaption", "caption", "center", "html"};
  return *set;
}

bool IsBoilerplateMarker(std::string_view value) {
  static constexpr std::array<std::string_view, 16> kMarkers = {
      "nav",    "menu",      "footer",  "sidebar", "advert", "sponsor",
      "promo",  "share",     "social",  "cookie",  "subscribe", "newsletter",
      "related", "breadcrumb", "comment", "banner"};
  const std::string lower = absl::AsciiStrToLower(AbslView(value));
  for (std::string_view marker : kMarkers) {
    if (absl::StrContains(lower, AbslView(marker))) return true;
  }
  // "ad" as a whole class token: "ad", "ad-slot", "ads".
  for (absl::string_view token :
       absl::StrSplit(lower, ' ', absl::SkipEmpty())) {
    if (token == "ad" || token == "ads" || absl::StartsWith(token, "ad-") ||
        absl::StartsWith(token, "ad_")) {
      return true;
    }
  }
  return false;
}

bool IsSkippedContainer(const Tag& tag) {
  if (SkippedElements().contains(tag.name)) return true;
  if (tag.name == "body" || tag.name == "html" || tag.name == "main" ||
      tag.name == "article") {
    return false;
  }
  if (tag.Attribute("aria-hidden") == "true") return true;
  const std::string_view role = tag.Attribute("role");
  if (role == "navigation" || role == "banner" || role == "contentinfo" ||
      role == "complementary") {
    return true;
  }
  return IsBoilerplateMarker(tag.Attribute("class")) ||
         IsBoilerplateMarker(tag.Attribute("id"));
}

// Collapses whitespace runs to one space and trims.
std::string NormalizeSpace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (size_t pos = 0; pos < text.size();) {
    const size_t start = pos;
    const char32_t c = DecodeUtf8(text, &pos);
    if (IsSpaceCodepoint(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

bool IsHeading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

size_t CountWords(std::string_view text) {
  size_t words = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c));
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

struct Block {
  std::string tag;        // innermost enclosing block element
  std::string raw;        // text as written, whitespace not normalized
  size_t link_bytes = 0;  // bytes of raw inside <a>
};

struct OpenElement {
  std::string name;
  bool skipped;
};

// "Story | Site" -> "Story" when Site is the known venue.
std::string StripSiteSuffix(const std::string& title, std::string_view venue) {
  if (venue.empty()) return title;
  for (std::string_view sep : {" | ", " - ", " \xE2\x80\x93 ", " \xE2\x80\x94 "}) {
    const std::string suffix = absl::StrCat(AbslView(sep), AbslView(venue));
    if (title.size() > suffix.size() && absl::EndsWith(title, suffix)) {
      return title.substr(0, title.size() - suffix.size());
    }
  }
  return title;
}

class Extractor {
 public:
  explicit Extractor(std::string_view html) : html_(html) {}

  ExtractedDocument Run() {
    size_t pos = 0;
    while (pos < html_.size()) {
      const size_t lt = html_.find('<', pos);
      const size_t text_end = lt == std::string_view::npos ? html_.size() : lt;
      if (text_end > pos) AddText(html_.substr(pos, text_end - pos));
      if (lt == std::string_view::npos) break;
      pos = lt;
      if (html_.substr(pos, 4) == "<!--") {
        const size_t end = html_.find("-->", pos + 4);
        pos = end == std::string_view::npos ? html_.size() : end + 3;
        continue;
      }
      if (pos + 1 < html_.size() &&
          (html_[pos + 1] == '!' || html_[pos + 1] == '?')) {
        const size_t end = html_.find('>', pos);
        pos = end == std::string_view::npos ? html_.size() : end + 1;
        continue;
      }
      std::optional<Tag> tag = ParseTag(html_, &pos);
      if (!tag) {
        AddText("<");
        ++pos;
        continue;
      }
      if (tag->closing) {
        CloseElement(tag->name);
      } else {
        OpenTag(*tag, &pos);
      }
    }
    Flush();
    return Finish();
  }

 private:
  void AddText(std::string_view raw) {
    if (skip_depth_ > 0) return;
    std::string decoded = DecodeHtmlEntities(raw);
    if (link_depth_ > 0) current_.link_bytes += decoded.size();
    current_.raw += decoded;
  }

  void OpenTag(const Tag& tag, size_t* pos) {
    if (tag.name == "meta") {
      const std::string_view property = tag.Attribute("property");
      if (property == "og:site_name" && venue_.empty()) {
        venue_ = NormalizeSpace(tag.Attribute("content"));
      } else if (property == "og:title" && og_title_.empty()) {
        og_title_ = NormalizeSpace(tag.Attribute("content"));
      }
      return;
    }
    if (RawTextElements().contains(tag.name) && !tag.self_closing) {
      SkipRawText(tag.name, pos);
      return;
    }
    if (tag.name == "br") {
      AddText(" ");
      return;
    }
    if (VoidElements().contains(tag.name) || tag.self_closing) return;

    const bool block = BlockElements().contains(tag.name);
    // <p> cannot contain block content; a new block closes it.
    if (block && !stack_.empty() && stack_.back().name == "p") {
      CloseElement("p");
    }
    const bool skipped = IsSkippedContainer(tag);
    if (block || skipped) Flush();
    stack_.push_back(OpenElement{tag.name, skipped});
    if (skipped) ++skip_depth_;
    if (tag.name == "a") ++link_depth_;
    if (block) current_.tag = tag.name;
  }

  void SkipRawText(const std::string& name, size_t* pos) {
    const std::string close = "</" + name;
    size_t end = *pos;
    while ((end = html_.find("</", end)) != std::string_view::npos) {
      if (absl::EqualsIgnoreCase(AbslView(html_.substr(end, close.size())),
                                 close)) break;
      end += 2;
    }
    const size_t content_end =
        end == std::string_view::npos ? html_.size() : end;
    if (name == "title" && title_.empty()) {
      title_ = NormalizeSpace(
          DecodeHtmlEntities(html_.substr(*pos, content_end - *pos)));
    }
    if (end == std::string_view::npos) {
      *pos = html_.size();
      return;
    }
    const size_t gt = html_.find('>', end);
    *pos = gt == std::string_view::npos ? html_.size() : gt + 1;
  }

  void CloseElement(std::string_view name) {
    auto it = std::find_if(stack_.rbegin(), stack_.rend(),
                           [&](const OpenElement& e) { return e.name == name; });
    if (it == stack_.rend()) return;
    const size_t depth = static_cast<size_t>(stack_.rend() - it) - 1;
    while (stack_.size() > depth) {
      const OpenElement e = stack_.back();
      stack_.pop_back();
      if (e.name == "a" && link_depth_ > 0) --link_depth_;
      const bool block = BlockElements().contains(e.name);
      if (block || e.skipped) Flush();
      if (e.skipped) --skip_depth_;
      if (block) current_.tag = EnclosingBlockTag();
    }
  }

  std::string EnclosingBlockTag() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (BlockElements().contains(it->name)) return it->name;
    }
    return "root";
  }

  void Flush() {
    if (skip_depth_ == 0 && !current_.raw.empty()) {
      if (current_.tag == "h1" && first_h1_.empty()) {
        first_h1_ = NormalizeSpace(current_.raw);
      }
      finished_.push_back(current_);
    }
    current_.raw.clear();
    current_.link_bytes = 0;
  }

  ExtractedDocument Finish() const {
    std::vector<std::string> paragraphs;
    std::vector<std::string> fallback;
    for (const Block& block : finished_) {
      const std::string text = NormalizeSpace(block.raw);
      if (text.empty()) continue;
      const double link_density = static_cast<double>(block.link_bytes) /
                                  static_cast<double>(block.raw.size());
      if (link_density >= 0.5) continue;
      const size_t words = CountWords(text);
      if (block.tag == "p") {
        // Drop stray labels such as "Advertisement" or "Read more".
        const char last = text.back();
        const bool terminal = last == '.' || last == '!' || last == '?' ||
                              last == '"' || absl::EndsWith(text, "\xE2\x80\x9D");
        if (words < 3 && !terminal) continue;
        paragraphs.push_back(text);
      } else if (words >= 8 && !IsHeading(block.tag)) {
        fallback.push_back(text);
      }
    }
    ExtractedDocument doc;
    // <title> usually carries a " | Site" suffix; the other two do not.
    if (!og_title_.empty()) {
      doc.title = og_title_;
    } else if (!first_h1_.empty()) {
      doc.title = first_h1_;
    } else {
      doc.title = StripSiteSuffix(title_, venue_);
    }
    doc.venue = venue_;
    doc.body =
        absl::StrJoin(paragraphs.empty() ? fallback : paragraphs, "\n\n");
    return doc;
  }

  std::string_view html_;
  Block current_{"root", "", 0};
  std::vector<Block> finished_;
  std::vector<OpenElement> stack_;
  int skip_depth_ = 0;
  int link_depth_ = 0;
  std::string title_;
  std::string venue_;
  std::string first_h1_;
  std::string og_title_;
};

const absl::flat_hash_map<std::string_view, char32_t>& NamedEntities() {
  static const auto* map = new absl::flat_hash_map<std::string_view, char32_t>{
      {"amp", '&'},       {"lt", '<'},        {"gt", '>'},
      {"quot", '"'},      {"apos", '\''},     {"nbsp", 0xA0},
      {"rsquo", 0x2019},  {"lsquo", 0x2018},  {"rdquo", 0x201D},
      {"ldquo", 0x201C},  {"mdash", 0x2014},  {"ndash", 0x2013},
      {"hellip", 0x2026}, {"copy", 0xA9},     {"reg", 0xAE},
      {"trade", 0x2122},  {"eacute", 0xE9},   {"egrave", 0xE8},
      {"aacute", 0xE1},   {"oacute", 0xF3},   {"uuml", 0xFC},
      {"ouml", 0xF6},     {"auml", 0xE4},     {"ntilde", 0xF1},
      {"ccedil", 0xE7},   {"iacute", 0xED},   {"middot", 0xB7},
      {"bull", 0x2022},   {"deg", 0xB0},      {"euro", 0x20AC},
      {"pound", 0xA3},    {"laquo", 0xAB},    {"raquo", 0xBB},
      {"thinsp", 0x2009}, {"ensp", 0x2002},   {"emsp", 0x2003},
      {"shy", 0xAD},      {"zwj", 0x200D},    {"zwnj", 0x200C}};
  return *map;
}

}  // namespace

bool LooksLikeHtml(std::string_view text) {
  for (size_t i = text.find('<'); i != std::string_view::npos;
       i = text.find('<', i + 1)) {
    if (i + 1 >= text.size()) break;
    const char next = text[i + 1];
    if (std::isalpha(static_cast<unsigned char>(next)) || next == '/' ||
        next == '!') {
      const size_t gt = text.find('>', i);
      if (gt != std::string_view::npos) return true;
    }
  }
  return false;
}

std::string DecodeHtmlEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    const size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(text[i++]);
      continue;
    }
    const std::string_view ref = text.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (!ref.empty() && ref[0] == '#') {
      uint32_t value = 0;
      const bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      const auto [end, ec] = std::from_chars(
          digits.data(), digits.data() + digits.size(), value, hex ? 16 : 10);
      const bool ok = ec == std::errc() && end == digits.data() + digits.size();
      if (ok && value > 0 && value < 0x110000) cp = value;
    } else if (auto it = NamedEntities().find(ref); it != NamedEntities().end()) {
      cp = it->second;
    }
    if (!cp) {
      out.push_back(text[i++]);
      continue;
    }
    AppendUtf8(*cp, &out);
    i = semi + 1;
  }
  return out;
}

absl::StatusOr<ExtractedDocument> ExtractBody(std::string_view html) {
  if (!LooksLikeHtml(html)) {
    if (TrimWhitespace(html).empty()) {
      return absl::InvalidArgumentError("empty document: no text");
    }
    return ExtractedDocument{"", "", std::string(html)};
  }
  ExtractedDocument doc = Extractor(html).Run();
  if (doc.body.empty()) {
    return absl::InvalidArgumentError(
        "empty document: no extractable paragraph text");
  }
  return doc;
}

}  // namespace crosscheck::corpus
