#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dictnn {

// Subword vocabulary loaded from a one-token-per-line file. Line number
// (zero-based) is the token id. Continuation pieces are stored with their
// leading "##" marker exactly as they appear in the file.
class Vocab {
  public:
    static constexpr std::string_view kUnk = "[UNK]";
    static constexpr std::string_view kCls = "[CLS]";
    static constexpr std::string_view kSep = "[SEP]";
    static constexpr std::string_view kPad = "[PAD]";

    // Throws std::runtime_error on duplicate tokens (reports both line
    // numbers) or when any of the four special tokens is missing.
    static Vocab load(std::istream& in);
    static Vocab load_file(const std::string& path);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(std::size_t id) const { return tokens_[id]; }

    // Returns the id of `piece`, or -1 when absent.
    long lookup(std::string_view piece) const;
    bool contains(std::string_view piece) const { return lookup(piece) >= 0; }

    long unk_id() const { return unk_id_; }
    long cls_id() const { return cls_id_; }
    long sep_id() const { return sep_id_; }
    long pad_id() const { return pad_id_; }

  private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> index_;
    long unk_id_ = -1;
    long cls_id_ = -1;
    long sep_id_ = -1;
    long pad_id_ = -1;
};

}  // namespace dictnn
