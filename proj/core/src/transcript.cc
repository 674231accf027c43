#include "twocycle/transcript.h"

#include "twocycle/bits.h"

namespace twocycle {
namespace {

std::string BigEndian(int value, int width) {
  std::string out(width, '0');
  for (int k = width - 1; k >= 0; --k, value >>= 1) {
    out[k] = static_cast<char>('0' + (value & 1));
  }
  return out;
}

}  // namespace

std::string_view SenderName(Sender s) { return s == Sender::kA ? "A" : "B"; }

std::string_view MessageKindName(MessageKind k) {
  switch (k) {
    case MessageKind::kFlag:
      return "flag";
    case MessageKind::kLayerIndex:
      return "layer_index";
    case MessageKind::kTypeIndex:
      return "type_index";
  }
  return "?";
}

Message Message::Flag(Sender sender) {
  return {sender, MessageKind::kFlag, std::nullopt, 1, "0"};
}

Message Message::LayerIndex(Sender sender, int layer, int n) {
  const int width = CeilLog2(n);
  return {sender, MessageKind::kLayerIndex, layer, 1 + width,
          "1" + BigEndian(layer - 1, width)};
}

Message Message::TypeIndex(Sender sender, int type, int num_types) {
  const int width = CeilLog2(num_types);
  return {sender, MessageKind::kTypeIndex, type, width,
          BigEndian(type - 1, width)};
}

void Transcript::Append(Message m) {
  total_bits_ += m.bits;
  messages_.push_back(std::move(m));
}

void Transcript::Extend(const Transcript& other) {
  for (const auto& m : other.messages_) Append(m);
}

std::string Transcript::Encoded() const {
  std::string out;
  for (const auto& m : messages_) out += m.encoded;
  return out;
}

}  // namespace twocycle
