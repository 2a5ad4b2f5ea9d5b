import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-report-card',
  template: `<div>{{ name }}</div>`
})
export class ReportCardComponent {
  @Input() name!: string;
  @Input() age!: number;
  @Input() email!: string;
  @Input() role!: string;
  @Input() isActive!: boolean;
  @Input() showAvatar!: boolean;
}
