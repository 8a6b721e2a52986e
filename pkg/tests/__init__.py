# dpcolor 测试
