#include "dictnn/vocab.hpp"

#include <fstream>
#include <stdexcept>

namespace dictnn {

Vocab Vocab::load(std::istream& in) {
    Vocab v;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto [it, inserted] = v.index_.emplace(line, v.tokens_.size());
        if (!inserted) {
            throw std::runtime_error("vocab: duplicate token '" + line +
                                     "' on lines " + std::to_string(it->second + 1) +
                                     " and " + std::to_string(line_no));
        }
        v.tokens_.push_back(line);
    }
    v.unk_id_ = v.lookup(kUnk);
    v.cls_id_ = v.lookup(kCls);
    v.sep_id_ = v.lookup(kSep);
    v.pad_id_ = v.lookup(kPad);
    for (auto [id, name] : {std::pair<long, std::string_view>{v.unk_id_, kUnk},
                            {v.cls_id_, kCls},
                            {v.sep_id_, kSep},
                            {v.pad_id_, kPad}}) {
        if (id < 0) {
            throw std::runtime_error("vocab: missing special token '" +
                                     std::string(name) + "'");
        }
    }
    return v;
}

Vocab Vocab::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("vocab: cannot open " + path);
    return load(in);
}

long Vocab::lookup(std::string_view piece) const {
    auto it = index_.find(std::string(piece));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

}  // namespace dictnn
