#include <nnfkit/nnfkit.hpp>
int main() { return 0; }
