"""
DP Color Workbench - 精确 DP 着色（对应着色）工作台

模块结构:
- core/: 配置、异常、诊断输出
- graph/: 图、标准图族、笛卡尔积、退化序
- cover/: 覆盖、校验、标号检测、DOT 导出
- solver/: H-着色搜索、计数、χ_DP 与 P_DP 穷举
- product/: G □ K_{k,t} 上的易损着色框架与坏覆盖构造
- schemas/: JSON 文档的 pydantic 模型
- cli/: 命令行与论断验证
"""

__version__ = '1.0.0'
