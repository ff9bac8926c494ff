// Copyright 2026 The zhcorrect Authors. All Rights Reserved.
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


#include "zhcorrect/synthetic.h"

#include <random>
#include <string>

namespace zhcorrect {
namespace {

constexpr const char* kLexicon[] = {
    "我们", "你们", "他们", "今天", "明天", "昨天", "学生", "老师", "学校",
    "朋友", "喜欢", "时候", "已经", "自己", "作业", "工作", "做饭", "做事",
    "现在", "在家", "再见", "再次", "我的", "好的", "慢慢地", "跑得快",
    "想象", "好像", "坐下", "座位", "那里", "哪里", "带来", "戴帽子", "问题",
    "练习", "漂亮", "习惯", "历史", "经验", "天气", "一起", "非常", "知道",
    "大家", "地方", "中国", "北京", "看书", "吃饭", "电影", "高兴", "快乐",
    "打球", "上课", "下课", "写字", "唱歌", "跳舞", "很", "去", "来", "和",
    "也", "都", "是", "有", "说",
};

// gold -> error characters. Most errors are look-alike characters that never
// occur in correct text; 巳 is shared by 己 and 已, and the last row confuses
// two legitimate characters. The first half of the rows (in this
// order) is used for the stage-1 corpus.
constexpr const char* kConfusionTable[][2] = {
    {"候", "侯"}, {"经", "径"}, {"题", "提"}, {"练", "炼"}, {"己", "巳"},
    {"漂", "飘"}, {"欢", "观"}, {"校", "较"}, {"惯", "贯"}, {"历", "厉"},
    {"已", "巳"}, {"验", "险"}, {"作", "做"},
};
constexpr std::size_t kConfusionEntries = std::size(kConfusionTable);

const Units kFunctionUnits = DecodeUtf8("了的是");

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {
    for (const char* w : kLexicon) words_.push_back(DecodeUtf8(w));
  }

  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool Chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  Units Sentence() {
    Units s;
    const std::size_t n_words = 4 + Below(5);
    for (std::size_t i = 0; i < n_words; ++i) s += words_[Below(words_.size())];
    return s;
  }

  // Replaces one or two confusable units; returns false if none exist.
  bool Misspell(Units& s, const std::map<Unit, Units>& table) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (table.count(s[i])) slots.push_back(i);
    }
    if (slots.empty()) return false;
    const std::size_t n_errors = slots.size() > 1 && Chance(0.3) ? 2 : 1;
    for (std::size_t e = 0; e < n_errors; ++e) {
      const std::size_t pick = Below(slots.size());
      const std::size_t pos = slots[pick];
      slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(pick));
      const Units& errors = table.at(s[pos]);
      s[pos] = errors[Below(errors.size())];
    }
    return true;
  }

  void Ungrammatical(Units& s) {
    const std::size_t pos = Below(s.size());
    switch (Below(4)) {
      case 0:  // duplicated unit
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), s[pos]);
        break;
      case 1:  // dropped unit
        if (s.size() > 1) s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
        break;
      case 2:  // stray function word
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos),
                 kFunctionUnits[Below(kFunctionUnits.size())]);
        break;
      default:  // swapped neighbours
        if (pos + 1 < s.size()) std::swap(s[pos], s[pos + 1]);
        break;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Units> words_;
};

std::map<Unit, Units> TablePrefix(std::size_t entries) {
  std::map<Unit, Units> table;
  for (std::size_t i = 0; i < entries && i < kConfusionEntries; ++i) {
    table[DecodeUtf8(kConfusionTable[i][0]).front()] =
        DecodeUtf8(kConfusionTable[i][1]);
  }
  return table;
}

void AddPair(Corpus& corpus, const Units& source, const Units& target) {
  ParallelPair pair;
  pair.id = std::to_string(corpus.size());
  pair.source = UnitSeq(source);
  pair.references.push_back(UnitSeq(target));
  corpus.Add(std::move(pair));
}

}  // namespace

const std::map<Unit, Units>& SyntheticConfusions() {
  static const std::map<Unit, Units> table = TablePrefix(kConfusionEntries);
  return table;
}

SyntheticSuite MakeSyntheticSuite(const SyntheticOptions& options) {
  const NormalizePolicy policy = NormalizePolicy::Default();
  SyntheticSuite suite{Corpus("stage1", TaskTag::kAlign, policy),
                       Corpus("csc", TaskTag::kCsc, policy),
                       Corpus("cgc", TaskTag::kCgc, policy)};
  Generator gen(options.seed);
  const auto& full = SyntheticConfusions();
  const auto partial = TablePrefix(kConfusionEntries / 2);

  for (std::size_t i = 0; i < options.stage1_pairs; ++i) {
    Units gold = gen.Sentence();
    Units src = gold;
    if (gen.Chance(options.error_rate)) {
      if (gen.Chance(0.5)) {
        gen.Misspell(src, partial);
      } else {
        gen.Ungrammatical(src);
      }
    }
    AddPair(suite.stage1, src, gold);
  }
  for (std::size_t i = 0; i < options.csc_pairs; ++i) {
    Units gold = gen.Sentence();
    Units src = gold;
    if (gen.Chance(options.error_rate)) gen.Misspell(src, full);
    AddPair(suite.csc, src, gold);
  }
  for (std::size_t i = 0; i < options.cgc_pairs; ++i) {
    Units gold = gen.Sentence();
    Units src = gold;
    if (gen.Chance(options.error_rate)) gen.Ungrammatical(src);
    AddPair(suite.cgc, src, gold);
  }
  return suite;
}

}  // namespace zhcorrect
