import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-course-card',
  template: `<div>{{ name }}</div>`
})
export class CourseCardComponent {
  @Input() name!: string;
  @Input() age!: number;
  @Input() email!: string;
  @Input() role!: string;
  @Input() isActive!: boolean;
  @Input() showAvatar!: boolean;
}
