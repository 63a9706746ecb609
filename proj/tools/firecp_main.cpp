#include <iostream>

int main() {
  std::cout << "firecp: CLI not wired up yet\n";
  return 0;
}
