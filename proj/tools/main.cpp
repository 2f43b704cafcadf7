#include <iostream>

int main() {
  std::cout << "regsem (under construction)\n";
  return 0;
}
