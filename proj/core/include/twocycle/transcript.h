#ifndef TWOCYCLE_TRANSCRIPT_H_
#define TWOCYCLE_TRANSCRIPT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twocycle {

enum class Sender { kA, kB };
std::string_view SenderName(Sender s);

enum class MessageKind { kFlag, kLayerIndex, kTypeIndex };
std::string_view MessageKindName(MessageKind k);

// Wire framing:
//   flag          "0"                                     1 bit
//   layer_index   "1" + (i-1) big-endian in ceil(log2 n)  1 + ceil(log2 n)
//   type_index    (t-1) big-endian in ceil(log2 T)        ceil(log2 T)
struct Message {
  Sender sender = Sender::kA;
  MessageKind kind = MessageKind::kFlag;
  std::optional<int> payload;  // 1-based layer or type; empty for a flag
  int bits = 0;
  std::string encoded;         // the framed bits, '0'/'1'

  static Message Flag(Sender sender);
  static Message LayerIndex(Sender sender, int layer, int n);
  static Message TypeIndex(Sender sender, int type, int num_types);

  bool operator==(const Message&) const = default;
};

class Transcript {
 public:
  void Append(Message m);
  void Extend(const Transcript& other);

  const std::vector<Message>& messages() const { return messages_; }
  int total_bits() const { return total_bits_; }
  // Concatenation of every message's framed bits.
  std::string Encoded() const;

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<Message> messages_;
  int total_bits_ = 0;
};

}  // namespace twocycle

#endif  // TWOCYCLE_TRANSCRIPT_H_
