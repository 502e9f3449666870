/*
 * Copyright 2026 The lbisim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "lbisim/term.hpp"

namespace lbisim {

/// A class of contexts, decided on canonical labels.
class LabelSet {
public:
    /// -|open n.T
    static LabelSet lm();
    /// - and -|a.T
    static LabelSet la();
    /// -, -|a.T and -|'a.T
    static LabelSet lccs();
    static LabelSet all();
    static LabelSet none();
    /// Labels matching one of the patterns. A process variable in a pattern
    /// matches any hole-free subterm, a name variable ambient matches any
    /// name variable ambient.
    static LabelSet patterns(std::string name, Calculus c, const std::vector<Proc> &pats);

    const std::string &name() const { return name_; }
    bool contains(const Label &l) const;
    bool is_all() const { return kind_ == Kind_::All; }
    bool is_empty() const { return kind_ == Kind_::None; }

private:
    enum class Kind_ { LM, LA, LCCS, All, None, Patterns };
    LabelSet(Kind_ k, std::string name) : kind_(k), name_(std::move(name)) {}

    Kind_ kind_;
    std::string name_;
    std::vector<Proc> patterns_;
};

/// LM, LA, LCCS, ALL or EMPTY (case-insensitive). Throws Error otherwise.
LabelSet builtin_label_set(const std::string &name);
/// One pattern per non-empty line; lines starting with '#' are comments.
LabelSet parse_label_set(const std::string &name, const std::string &text, Calculus c);

} // namespace lbisim
