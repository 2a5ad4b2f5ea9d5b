import { Component, Input, input } from '@angular/core';

export interface ReportCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
}

@Component({
  selector: 'app-report-card',
  template: `<div>{{ config.name }}</div>`
})
export class ReportCardComponent {
  @Input() config!: ReportCardConfig;
}
