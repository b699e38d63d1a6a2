#include <pthread.h>

#include "modulo/cli.hpp"

namespace {

struct Invocation {
  std::vector<std::string> args;
  int code = 3;
};

void* entry(void* raw) {
  auto* inv = static_cast<Invocation*>(raw);
  inv->code = modulo::cli::run(inv->args);
  return nullptr;
}

}  // namespace

// Deeply nested propositions and proofs recurse proportionally to their
// depth; run the tool on a thread with a generous stack so large fuel
// budgets on diverging systems degrade into fuel exhaustion, not a crash.
int main(int argc, char** argv) {
  Invocation inv{std::vector<std::string>(argv + 1, argv + argc)};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 512u << 20);
  pthread_t thread;
  if (pthread_create(&thread, &attr, entry, &inv) != 0) return modulo::cli::run(inv.args);
  pthread_join(thread, nullptr);
  return inv.code;
}
