// Command-line surface; subcommands are filled in as modules land.
#include <cstdio>

int main() {
  std::puts("hgc: placeholder");
  return 0;
}
