#include <cstdio>
int main() { std::puts("qmaps cli: placeholder"); return 1; }
